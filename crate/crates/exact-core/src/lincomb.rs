use crate::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A finitely-supported Q-linear combination of keys. Zero coefficients are
/// never stored, so equality of maps is equality of elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LinComb<K: Ord + Clone> {
    terms: BTreeMap<K, Rat>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn single(key: K, coeff: Rat) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, key: K, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * scale);
        }
    }

    pub fn sub(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), -v.clone());
        }
    }

    pub fn scaled(&self, scale: &Rat) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, scale);
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-crate::rat(1))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (K, Rat)> {
        self.terms.into_iter()
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Map each key to a whole linear combination and resum (linear extension).
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| format!("{}*{:?}", v, k))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
