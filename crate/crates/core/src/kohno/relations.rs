//! The three families of infinitesimal braid relations.

use super::KohnoElement;
use crate::error::Result;

/// `[B_left, Σ B_right]` with every pair stored as `(min, max)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: u8,
    pub indices: Vec<usize>,
    pub left: (usize, usize),
    pub right: Vec<(usize, usize)>,
}

impl RelationInstance {
    fn new(
        family: u8,
        indices: Vec<usize>,
        left: (usize, usize),
        right: &[(usize, usize)],
    ) -> Self {
        let sym = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        Self {
            family,
            indices,
            left: sym(left),
            right: right.iter().copied().map(sym).collect(),
        }
    }

    /// The relation as an element, which must vanish in normal form.
    pub fn evaluate(&self, strands: usize) -> Result<KohnoElement> {
        let left = KohnoElement::generator(self.left.0, self.left.1, strands)?;
        let mut right = KohnoElement::zero(strands);
        for &(a, b) in &self.right {
            right = right.try_add(&KohnoElement::generator(a, b, strands)?)?;
        }
        left.bracket(&right)
    }

    pub fn describe(&self) -> String {
        let gens: Vec<String> = self
            .right
            .iter()
            .map(|(a, b)| format!("B({a},{b})"))
            .collect();
        format!(
            "({}) [B({},{}),{}]",
            self.family,
            self.left.0,
            self.left.1,
            gens.join("+")
        )
    }
}

/// Every instance over strands `1..=n`. Family (1) pairs disjoint index
/// pairs once; family (2) is `[B_ij, B_is + B_sj]` for `i < s < j`; family
/// (3) is `[B_ij, B_it + B_jt]` for `i < j` and `t` outside `[i, j]`.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for &(s, t) in &pairs[x + 1..] {
            if i != s && i != t && j != s && j != t {
                out.push(RelationInstance::new(
                    1,
                    vec![i, j, s, t],
                    (i, j),
                    &[(s, t)],
                ));
            }
        }
    }
    for &(i, j) in &pairs {
        for s in i + 1..j {
            out.push(RelationInstance::new(
                2,
                vec![i, j, s],
                (i, j),
                &[(i, s), (s, j)],
            ));
        }
    }
    for &(i, j) in &pairs {
        for t in (1..=n).filter(|&t| t < i || t > j) {
            out.push(RelationInstance::new(
                3,
                vec![i, j, t],
                (i, j),
                &[(i, t), (j, t)],
            ));
        }
    }
    out
}

/// A relation instance together with its normal-form residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWitness {
    pub instance: RelationInstance,
    pub residue: KohnoElement,
}

impl RelationWitness {
    pub fn holds(&self) -> bool {
        self.residue.is_zero()
    }
}

/// Residues of all relation instances at `n` strands.
pub fn relations_check(n: usize) -> Result<Vec<RelationWitness>> {
    relation_instances(n)
        .into_iter()
        .map(|instance| {
            let residue = instance.evaluate(n)?;
            Ok(RelationWitness { instance, residue })
        })
        .collect()
}
