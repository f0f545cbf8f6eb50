//! Finite partially ordered sets over opaque string ids.

use std::collections::BTreeMap;

use thiserror::Error;

/// Index of an element within its owning poset or frame.
///
/// Indices are only meaningful relative to the structure that produced them;
/// cross-structure transfer goes through string ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset has no elements")]
    Empty,
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("unknown element id `{0}`")]
    UnknownId(String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("antisymmetry violated: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),
    #[error("transitivity violated: `{0}` <= `{1}` <= `{2}` but `{0}` <= `{2}` is missing")]
    NotTransitive(String, String, String),
}

/// A finite poset: element ids plus a reflexive-antisymmetric-transitive
/// `leq` matrix, all checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Build from a full relation matrix. `leq[i][j]` means `ids[i] <= ids[j]`.
    pub fn new(ids: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        if ids.is_empty() {
            return Err(PosetError::Empty);
        }
        let n = ids.len();
        assert_eq!(leq.len(), n, "relation matrix has wrong height");
        for row in &leq {
            assert_eq!(row.len(), n, "relation matrix has wrong width");
        }
        let mut index = BTreeMap::new();
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(PosetError::DuplicateId(id.clone()));
            }
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(PosetError::NotReflexive(ids[i].clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(PosetError::NotAntisymmetric(ids[i].clone(), ids[j].clone()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] && !leq[i][k] {
                        return Err(PosetError::NotTransitive(
                            ids[i].clone(),
                            ids[j].clone(),
                            ids[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Poset { ids, index, leq })
    }

    /// Build from a generating relation: the reflexive-transitive closure of
    /// `pairs` is taken before validation, so covers are enough.
    pub fn from_relation<S: AsRef<str>>(
        ids: Vec<String>,
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        if ids.is_empty() {
            return Err(PosetError::Empty);
        }
        let n = ids.len();
        let mut index = BTreeMap::new();
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(PosetError::DuplicateId(id.clone()));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            let i = *index
                .get(a.as_ref())
                .ok_or_else(|| PosetError::UnknownId(a.as_ref().to_string()))?;
            let j = *index
                .get(b.as_ref())
                .ok_or_else(|| PosetError::UnknownId(b.as_ref().to_string()))?;
            leq[i][j] = true;
        }
        // Warshall closure
        for k in 0..n {
            let via = leq[k].clone();
            for row in leq.iter_mut() {
                if row[k] {
                    for (dst, &step) in row.iter_mut().zip(&via) {
                        *dst = *dst || step;
                    }
                }
            }
        }
        Self::new(ids, leq)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.ids.len()).map(Elem)
    }

    pub fn elem(&self, id: &str) -> Option<Elem> {
        self.index.get(id).copied().map(Elem)
    }

    pub fn id(&self, e: Elem) -> &str {
        &self.ids[e.0]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.0][b.0]
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.ids.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let strictly_between = (0..n).any(|k| {
                    k != i && k != j && self.leq[i][k] && self.leq[k][j]
                });
                if !strictly_between {
                    out.push((Elem(i), Elem(j)));
                }
            }
        }
        out
    }

    /// Longest-chain height of each element, bottoms at 0.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.ids.len();
        let mut h = vec![0usize; n];
        // relax repeatedly; n passes suffice on a finite poset
        for _ in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if i != j && self.leq[i][j] && h[j] < h[i] + 1 {
                        h[j] = h[i] + 1;
                    }
                }
            }
        }
        h
    }

    /// Restriction to the elements of `keep`, preserving ids and relative order.
    pub fn restrict(&self, keep: &[Elem]) -> Poset {
        let ids: Vec<String> = keep.iter().map(|&e| self.ids[e.0].clone()).collect();
        let leq: Vec<Vec<bool>> = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| self.leq(a, b)).collect())
            .collect();
        Poset::new(ids, leq).expect("restriction of a poset is a poset")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn closure_from_covers() {
        let p = Poset::from_relation(ids(&["0", "m", "1"]), &[("0", "m"), ("m", "1")]).unwrap();
        let b = p.elem("0").unwrap();
        let t = p.elem("1").unwrap();
        assert!(p.leq(b, t), "closure must add 0 <= 1");
        assert!(!p.leq(t, b));
    }

    #[test]
    fn rejects_cycle() {
        let err = Poset::from_relation(ids(&["a", "b"]), &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::NotAntisymmetric(..)));
    }

    #[test]
    fn rejects_duplicate_and_unknown() {
        assert!(matches!(
            Poset::from_relation(ids(&["a", "a"]), &[] as &[(&str, &str)]),
            Err(PosetError::DuplicateId(_))
        ));
        assert!(matches!(
            Poset::from_relation(ids(&["a"]), &[("a", "z")]),
            Err(PosetError::UnknownId(_))
        ));
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(
            Poset::from_relation(vec![], &[] as &[(&str, &str)]).unwrap_err(),
            PosetError::Empty
        );
    }

    #[test]
    fn rejects_broken_matrix() {
        // missing transitive edge
        let leq = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let err = Poset::new(ids(&["0", "m", "1"]), leq).unwrap_err();
        assert!(matches!(err, PosetError::NotTransitive(..)));

        let leq = vec![vec![false]];
        assert!(matches!(
            Poset::new(ids(&["x"]), leq),
            Err(PosetError::NotReflexive(_))
        ));
    }

    #[test]
    fn covers_of_diamond() {
        let p = Poset::from_relation(
            ids(&["0", "a", "b", "1"]),
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        let mut covers: Vec<(String, String)> = p
            .covers()
            .into_iter()
            .map(|(x, y)| (p.id(x).to_string(), p.id(y).to_string()))
            .collect();
        covers.sort();
        assert_eq!(
            covers,
            vec![
                ("0".into(), "a".into()),
                ("0".into(), "b".into()),
                ("a".into(), "1".into()),
                ("b".into(), "1".into()),
            ]
        );
        assert_eq!(p.heights(), vec![0, 1, 1, 2]);
    }
}
