//! Canonical form of a pure simplicial complex via colour refinement on the
//! vertex–facet incidence graph plus individualisation.

use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

struct Complex {
    nv: usize,
    facets: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Complex {
    fn new(facets: &[Vec<usize>]) -> Self {
        let mut verts: Vec<usize> = facets.iter().flatten().copied().collect();
        verts.sort_unstable();
        verts.dedup();
        let idx: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| idx[v]).collect()).collect();
        let mut incident = vec![Vec::new(); verts.len()];
        for (k, f) in facets.iter().enumerate() {
            for &v in f {
                incident[v].push(k);
            }
        }
        Complex {
            nv: verts.len(),
            facets,
            incident,
        }
    }

    /// Replaces each key by its rank among the distinct sorted keys.
    fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
    }

    fn classes(c: &[usize]) -> usize {
        c.iter().max().map_or(0, |m| m + 1)
    }

    fn refine(&self, mut colour: Vec<usize>) -> Vec<usize> {
        loop {
            let fsig: Vec<Vec<usize>> = self
                .facets
                .iter()
                .map(|f| {
                    let mut s: Vec<usize> = f.iter().map(|&v| colour[v]).collect();
                    s.sort_unstable();
                    s
                })
                .collect();
            let fcol = Self::rank(&fsig);
            let vsig: Vec<(usize, Vec<usize>)> = (0..self.nv)
                .map(|v| {
                    let mut s: Vec<usize> = self.incident[v].iter().map(|&k| fcol[k]).collect();
                    s.sort_unstable();
                    (colour[v], s)
                })
                .collect();
            let next = Self::rank(&vsig);
            if Self::classes(&next) == Self::classes(&colour) {
                return next;
            }
            colour = next;
        }
    }

    fn certificate(&self, colour: &[usize]) -> Vec<Vec<usize>> {
        let mut cert: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| {
                let mut s: Vec<usize> = f.iter().map(|&v| colour[v]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        cert.sort();
        cert
    }

    fn search(&self, colour: Vec<usize>, best: &mut Option<Vec<Vec<usize>>>) {
        let colour = self.refine(colour);
        let n = Self::classes(&colour);
        if n == self.nv {
            let cert = self.certificate(&colour);
            if best.as_ref().map_or(true, |b| &cert < b) {
                *best = Some(cert);
            }
            return;
        }
        let mut size = vec![0; n];
        colour.iter().for_each(|&c| size[c] += 1);
        let target = (0..n).find(|&c| size[c] > 1).unwrap();
        for v in (0..self.nv).filter(|&v| colour[v] == target) {
            let keys: Vec<(usize, bool)> = (0..self.nv).map(|u| (colour[u], u != v)).collect();
            self.search(Self::rank(&keys), best);
        }
    }
}

/// Canonical facet list on vertices `0..n`, invariant under relabeling.
pub fn canonical_form(facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let c = Complex::new(facets);
    let mut best = None;
    c.search(vec![0; c.nv], &mut best);
    best.unwrap_or_default()
}

/// First eight bytes of the SHA-256 digest of the canonical form.
pub fn canonical_hash(facets: &[Vec<usize>]) -> u64 {
    let form = canonical_form(facets);
    let mut h = Sha256::new();
    for f in &form {
        for v in f {
            h.update([*v as u8]);
        }
        h.update([0xff]);
    }
    let d = h.finalize();
    u64::from_be_bytes(d[..8].try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn octahedron_boundary() -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let path = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        let star = vec![vec![0, 1], vec![0, 2], vec![0, 3]];
        assert_ne!(canonical_hash(&path), canonical_hash(&star));
    }

    #[test]
    fn symmetric_complex() {
        let o = octahedron_boundary();
        let relabeled: Vec<Vec<usize>> = o.iter().map(|f| f.iter().map(|v| (v * 7 + 3) % 6 + 10).collect()).collect();
        assert_eq!(canonical_form(&o), canonical_form(&relabeled));
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(perm in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle(),
                                      seed in proptest::collection::vec((0..12usize, 0..12usize, 0..12usize), 6..14)) {
            let facets: Vec<Vec<usize>> = seed.iter()
                .filter(|(a, b, c)| a != b && b != c && a != c)
                .map(|&(a, b, c)| { let mut f = vec![a, b, c]; f.sort(); f })
                .collect();
            prop_assume!(!facets.is_empty());
            let relabeled: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|&v| perm[v]).collect()).collect();
            prop_assert_eq!(canonical_hash(&facets), canonical_hash(&relabeled));
        }
    }
}
