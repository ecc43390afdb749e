//! Faithful representations, the bounded probe, and the decision
//! procedures for nilpotent groups.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::abstract_group::{
    cayley_table, core, coset_action, subgroup_classes, subgroups, AbstractGroup, Subgroup,
};
use crate::bsgs::{
    disjoint_union_action, disjoint_union_product, regular_representation, GeneratedGroup,
};
use crate::closure::{k_closure, k_closure_witness};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structure::{
    invariant_factor_count, is_elementary_abelian, sylow_decomposition, SylowDecomposition,
};

/// Which result decided a [`Verdict::TheoremDecided`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Citation {
    /// Nilpotent, Sylow orders at most `p^k`: totally k-closed iff no Sylow
    /// subgroup is `Z_p^k`.
    TheoremB,
    /// Abelian, nontrivial: totally `(n(G)+1)`-closed, not totally
    /// `n(G)`-closed.
    Cpr,
    /// Nilpotent: totally 2-closed iff cyclic or a generalized quaternion
    /// group times a cyclic group of odd order.
    NilpotentTwoClosed,
}

impl Citation {
    pub fn tag(self) -> &'static str {
        match self {
            Citation::TheoremB => "theorem-b",
            Citation::Cpr => "cpr",
            Citation::NilpotentTwoClosed => "nilpotent-2-closed",
        }
    }
}

/// Outcome of asking whether a group is totally k-closed.
#[derive(Debug, Clone)]
pub enum Verdict {
    TheoremDecided {
        totally_closed: bool,
        citation: Citation,
        detail: String,
    },
    /// A faithful representation that is not k-closed.
    WitnessFound {
        representation: GeneratedGroup,
        closure_order: u64,
    },
    /// Every faithful representation up to `max_degree` points is k-closed.
    /// This never implies total k-closedness on its own.
    ExhaustedBound {
        max_degree: usize,
        representations_checked: usize,
    },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::TheoremDecided { .. } => "theorem-decided",
            Verdict::WitnessFound { .. } => "witness-found",
            Verdict::ExhaustedBound { .. } => "exhausted-bound",
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Verdict::WitnessFound { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            Verdict::TheoremDecided {
                totally_closed,
                citation,
                detail,
            } => json!({
                "kind": self.kind(),
                "totally_closed": totally_closed,
                "citation": citation.tag(),
                "detail": detail,
            }),
            Verdict::WitnessFound {
                representation,
                closure_order,
            } => json!({
                "kind": self.kind(),
                "degree": representation.degree(),
                "representation": representation.to_string(),
                "group_order": representation.order(),
                "closure_order": closure_order,
            }),
            Verdict::ExhaustedBound {
                max_degree,
                representations_checked,
            } => json!({
                "kind": self.kind(),
                "max_degree": max_degree,
                "representations_checked": representations_checked,
            }),
        }
    }
}

/// A faithful action: the disjoint union of coset actions on the listed
/// point stabilizers, one per orbit, in order.
#[derive(Debug, Clone)]
pub struct Representation {
    pub stabilizers: Vec<Subgroup>,
    pub group: GeneratedGroup,
}

impl Representation {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// Orbit lengths, i.e. the indices of the point stabilizers.
    pub fn orbit_lengths(&self, a: &AbstractGroup) -> Vec<usize> {
        self.stabilizers
            .iter()
            .map(|h| a.order() / h.order())
            .collect()
    }
}

/// Faithful actions up to permutation equivalence, ordered by degree and
/// then by the sequence of stabilizer classes.
#[derive(Debug, Clone)]
pub struct FaithfulRepresentations<'a> {
    group: &'a AbstractGroup,
    classes: Vec<Subgroup>,
    multisets: Vec<Vec<usize>>,
    next: usize,
}

impl FaithfulRepresentations<'_> {
    pub fn len(&self) -> usize {
        self.multisets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multisets.is_empty()
    }
}

impl Iterator for FaithfulRepresentations<'_> {
    type Item = Representation;

    fn next(&mut self) -> Option<Representation> {
        let ms = self.multisets.get(self.next)?;
        self.next += 1;
        let stabilizers: Vec<Subgroup> = ms.iter().map(|&c| self.classes[c].clone()).collect();
        let parts: Vec<GeneratedGroup> = stabilizers
            .iter()
            .map(|h| coset_action(self.group, h))
            .collect();
        let group =
            disjoint_union_action(&parts).expect("coset actions share the table generators");
        Some(Representation { stabilizers, group })
    }
}

/// Every faithful permutation representation on at most `max_degree`
/// points: multisets of conjugacy classes of proper subgroups whose indices
/// sum to at most `max_degree` and whose cores intersect trivially.
/// Orbits with stabilizer the whole group (fixed points) are left out.
pub fn faithful_representations<'a>(
    a: &'a AbstractGroup,
    max_degree: usize,
    limits: &Limits,
) -> Result<FaithfulRepresentations<'a>> {
    let subs = subgroups(a, limits)?;
    let class_ids = subgroup_classes(a, &subs);
    let mut classes: Vec<Subgroup> = Vec::new();
    let mut seen = vec![false; subs.len()];
    for (h, &c) in subs.iter().zip(&class_ids) {
        if !seen[c] {
            seen[c] = true;
            if h.order() < a.order() {
                classes.push(h.clone());
            }
        }
    }
    let index: Vec<usize> = classes.iter().map(|h| a.order() / h.order()).collect();
    let cores: Vec<Subgroup> = classes.iter().map(|h| core(a, h)).collect();

    let mut multisets = Vec::new();
    let mut path = Vec::new();
    collect_multisets(
        0,
        max_degree,
        &a.whole(),
        &index,
        &cores,
        &mut path,
        &mut multisets,
    );
    multisets.sort_by(|x: &Vec<usize>, y: &Vec<usize>| {
        let dx: usize = x.iter().map(|&c| index[c]).sum();
        let dy: usize = y.iter().map(|&c| index[c]).sum();
        dx.cmp(&dy).then_with(|| x.cmp(y))
    });
    Ok(FaithfulRepresentations {
        group: a,
        classes,
        multisets,
        next: 0,
    })
}

fn collect_multisets(
    start: usize,
    budget: usize,
    kernel: &Subgroup,
    index: &[usize],
    cores: &[Subgroup],
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if !path.is_empty() && kernel.is_trivial() {
        out.push(path.clone());
    }
    for c in start..index.len() {
        if index[c] > budget {
            continue;
        }
        path.push(c);
        let k = kernel.intersection(&cores[c]);
        collect_multisets(c, budget - index[c], &k, index, cores, path, out);
        path.pop();
    }
}

/// Bounded semi-decision of total k-closedness: the first faithful
/// representation (in stream order) that is not k-closed, or
/// `ExhaustedBound` when none exists up to `max_degree`.
pub fn probe_totally_k_closed(
    a: &AbstractGroup,
    k: usize,
    max_degree: usize,
    limits: &Limits,
) -> Result<Verdict> {
    let reps = faithful_representations(a, max_degree, limits)?;
    let mut checked = 0;
    for rep in reps {
        checked += 1;
        if k_closure_witness(&rep.group, k, limits)?.is_some() {
            let closure = k_closure(&rep.group, k, limits)?;
            return Ok(Verdict::WitnessFound {
                representation: rep.group,
                closure_order: closure.order(),
            });
        }
    }
    Ok(Verdict::ExhaustedBound {
        max_degree,
        representations_checked: checked,
    })
}

/// Decides total k-closedness of a nilpotent group whose Sylow
/// p-subgroups have order at most `p^k`. Under that hypothesis a subgroup
/// `Z_p^k` can only be the whole Sylow p-subgroup, so the group fails to be
/// totally k-closed iff some Sylow subgroup is elementary abelian of order
/// exactly `p^k`.
pub fn theorem_b_classify(g: &GeneratedGroup, k: usize) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let decomposition = sylow_decomposition(g)?;
    for c in &decomposition.components {
        if c.exponent as usize > k {
            return Err(Error::HypothesisNotMet {
                prime: c.prime,
                order: c.order(),
                k,
            });
        }
    }
    let blocking: Vec<u64> = decomposition
        .components
        .iter()
        .filter(|c| c.exponent as usize == k && is_elementary_abelian(&c.group, c.prime))
        .map(|c| c.prime)
        .collect();
    let detail = if blocking.is_empty() {
        "no Sylow subgroup is elementary abelian of rank k".to_string()
    } else {
        let names: Vec<String> = blocking.iter().map(|p| format!("Z_{p}^{k}")).collect();
        format!("Sylow subgroup equal to {}", names.join(", "))
    };
    Ok(Verdict::TheoremDecided {
        totally_closed: blocking.is_empty(),
        citation: Citation::TheoremB,
        detail,
    })
}

/// Decides total k-closedness of an abelian group from its number of
/// invariant factors `n`: totally k-closed iff `k > n` (the trivial group
/// is totally k-closed for every k).
pub fn classify_abelian(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<Verdict> {
    let n = invariant_factor_count(g, limits)?;
    Ok(Verdict::TheoremDecided {
        totally_closed: k > n,
        citation: Citation::Cpr,
        detail: format!("n(G) = {n}"),
    })
}

/// Decides total 2-closedness of a nilpotent group. A p-group with a
/// unique subgroup of order p is cyclic or generalized quaternion, so the
/// cited classification reduces to that count on every Sylow subgroup.
pub fn classify_two_closed(g: &GeneratedGroup, limits: &Limits) -> Result<Verdict> {
    let decomposition = sylow_decomposition(g)?;
    let mut offending = Vec::new();
    for c in &decomposition.components {
        let solutions = c
            .group
            .elements(limits)?
            .filter(|x| x.pow(c.prime).is_identity())
            .count();
        if solutions as u64 != c.prime {
            offending.push(c.prime);
        }
    }
    let detail = if offending.is_empty() {
        "every Sylow subgroup has a unique subgroup of prime order".to_string()
    } else {
        format!("more than one subgroup of order p in the Sylow p-subgroup for p in {offending:?}")
    };
    Ok(Verdict::TheoremDecided {
        totally_closed: offending.is_empty(),
        citation: Citation::NilpotentTwoClosed,
        detail,
    })
}

/// Tries each decision procedure in turn: the Sylow-order criterion, the
/// 2-closed classification for k = 2, then the abelian rank criterion.
pub fn classify(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<Verdict> {
    match theorem_b_classify(g, k) {
        Err(Error::HypothesisNotMet { .. }) if k == 2 => classify_two_closed(g, limits),
        Err(Error::HypothesisNotMet { .. }) if g.is_abelian() => classify_abelian(g, k, limits),
        other => other,
    }
}

/// A Sylow subgroup given either as a permutation group or as a table.
#[derive(Debug, Clone)]
pub enum SylowPart {
    Permutation(GeneratedGroup),
    Abstract(AbstractGroup),
}

impl SylowPart {
    fn order(&self) -> u64 {
        match self {
            SylowPart::Permutation(g) => g.order(),
            SylowPart::Abstract(a) => a.order() as u64,
        }
    }

    fn regular(&self, limits: &Limits) -> Result<GeneratedGroup> {
        match self {
            SylowPart::Permutation(g) => Ok(regular_representation(&cayley_table(g, limits)?)),
            SylowPart::Abstract(a) => Ok(regular_representation(a)),
        }
    }
}

/// Sylow components of a decomposition as permutation parts.
pub fn sylow_parts(decomposition: &SylowDecomposition) -> BTreeMap<u64, SylowPart> {
    decomposition
        .components
        .iter()
        .map(|c| (c.prime, SylowPart::Permutation(c.group.clone())))
        .collect()
}

/// Faithful representation of the whole nilpotent group: `witness` for the
/// Sylow q-subgroup, and the right regular action for every other Sylow
/// subgroup, on disjoint point sets in increasing prime order.
pub fn combine_sylow_witness(
    parts: &BTreeMap<u64, SylowPart>,
    q: u64,
    witness: &GeneratedGroup,
    limits: &Limits,
) -> Result<GeneratedGroup> {
    let Some(target) = parts.get(&q) else {
        return Err(Error::InvalidArgument(format!(
            "no Sylow {q}-subgroup among the parts"
        )));
    };
    if target.order() != witness.order() {
        return Err(Error::InvalidArgument(format!(
            "witness has order {}, Sylow {q}-subgroup has order {}",
            witness.order(),
            target.order()
        )));
    }
    let mut pieces = Vec::with_capacity(parts.len());
    for (&p, part) in parts {
        if p == q {
            pieces.push(witness.clone());
        } else {
            pieces.push(part.regular(limits)?);
        }
    }
    let combined = disjoint_union_product(&pieces)?;
    if combined.degree() > limits.max_search_degree {
        return Err(Error::cap(
            "combined witness degree",
            combined.degree() as u64,
            limits.max_search_degree as u64,
        ));
    }
    Ok(combined)
}

/// Checks `G^(k) = ∏ P^(k)` over the Sylow subgroups `P` of a nilpotent
/// permutation group, by mutual membership of generators.
pub fn verify_chnl_product(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<bool> {
    let decomposition = sylow_decomposition(g)?;
    let whole = k_closure(g, k, limits)?;
    let mut gens = Vec::new();
    for c in &decomposition.components {
        gens.extend(k_closure(&c.group, k, limits)?.nontrivial_generators());
    }
    let product = GeneratedGroup::new(g.degree(), gens)?;
    Ok(whole.same_group(&product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::is_k_closed;

    fn g(spec: &str) -> GeneratedGroup {
        GeneratedGroup::parse(spec).unwrap()
    }

    fn table(spec: &str) -> AbstractGroup {
        cayley_table(&g(spec), &Limits::default()).unwrap()
    }

    #[test]
    fn z2_has_only_the_regular_action_on_two_points() {
        let z2 = table("2: (1 2)");
        let reps: Vec<_> = faithful_representations(&z2, 2, &Limits::default())
            .unwrap()
            .collect();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].group.same_group(&g("2: (1 2)")));
    }

    #[test]
    fn klein_four_representations_up_to_six() {
        let v4 = table("4: (1 2), (3 4)");
        let reps: Vec<_> = faithful_representations(&v4, 6, &Limits::default())
            .unwrap()
            .collect();
        let strings: Vec<String> = reps.iter().map(|r| r.group.to_string()).collect();
        assert!(strings.contains(&"6: (3 4)(5 6), (1 2)(5 6)".to_string()));
        assert!(reps.iter().any(|r| r.degree() == 4 && r.group.is_regular()));
        assert!(reps
            .iter()
            .any(|r| r.degree() == 4 && r.group.orbits().len() == 2));
        for r in &reps {
            assert!(r.degree() <= 6);
            assert_eq!(r.group.order(), 4, "faithful");
        }
        // no duplicate multisets
        let mut ms: Vec<Vec<usize>> = reps
            .iter()
            .map(|r| {
                r.stabilizers
                    .iter()
                    .flat_map(|h| h.elements()[1..].to_vec())
                    .collect()
            })
            .collect();
        let before = ms.len();
        ms.dedup();
        assert_eq!(ms.len(), before);
    }

    #[test]
    fn below_minimal_degree_nothing_is_faithful() {
        let v4 = table("4: (1 2), (3 4)");
        assert!(faithful_representations(&v4, 3, &Limits::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn klein_four_witness() {
        let v4 = table("4: (1 2), (3 4)");
        match probe_totally_k_closed(&v4, 2, 6, &Limits::default()).unwrap() {
            Verdict::WitnessFound {
                representation,
                closure_order,
            } => {
                assert_eq!(representation.to_string(), "6: (3 4)(5 6), (1 2)(5 6)");
                assert_eq!(closure_order, 8);
                assert!(!is_k_closed(&representation, 2, &Limits::default()).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn z4_exhausts() {
        let z4 = table("4: (1 2 3 4)");
        assert!(matches!(
            probe_totally_k_closed(&z4, 2, 8, &Limits::default()).unwrap(),
            Verdict::ExhaustedBound { max_degree: 8, .. }
        ));
    }

    #[test]
    fn trivial_group_exhausts_at_k1() {
        let t = table("1: ()");
        assert!(matches!(
            probe_totally_k_closed(&t, 1, 5, &Limits::default()).unwrap(),
            Verdict::ExhaustedBound {
                representations_checked: 0,
                ..
            }
        ));
    }

    #[test]
    fn sylow_order_criterion_examples() {
        let closed = |v: Verdict| match v {
            Verdict::TheoremDecided { totally_closed, .. } => totally_closed,
            _ => panic!(),
        };
        assert!(!closed(
            theorem_b_classify(&g("4: (1 2), (3 4)"), 2).unwrap()
        ));
        assert!(!closed(
            theorem_b_classify(&g("6: (3 4)(5 6), (1 2)(5 6)"), 2).unwrap()
        ));
        assert!(closed(
            theorem_b_classify(&g("4: (1 2 3 4), (1 3)"), 3).unwrap()
        ));
        assert!(closed(
            theorem_b_classify(&g("6: (1 2 3 4 5 6)"), 2).unwrap()
        ));
        assert!(matches!(
            theorem_b_classify(&g("4: (1 2 3 4), (1 3)"), 2),
            Err(Error::HypothesisNotMet {
                prime: 2,
                order: 8,
                k: 2
            })
        ));
        assert!(matches!(
            theorem_b_classify(&g("3: (1 2 3), (1 2)"), 2),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn abelian_classification() {
        let lim = Limits::default();
        let v = |g: &GeneratedGroup, k| match classify_abelian(g, k, &lim).unwrap() {
            Verdict::TheoremDecided { totally_closed, .. } => totally_closed,
            _ => panic!(),
        };
        let z2xz4 = g("6: (1 2), (3 4 5 6)");
        assert!(!v(&z2xz4, 2));
        assert!(v(&z2xz4, 3));
        assert!(v(&GeneratedGroup::trivial(1), 1));
    }

    #[test]
    fn combine_klein_witness_with_z3() {
        let lim = Limits::default();
        let grp = g("7: (1 2), (3 4), (5 6 7)");
        let parts = sylow_parts(&sylow_decomposition(&grp).unwrap());
        let witness = g("6: (3 4)(5 6), (1 2)(5 6)");
        let combined = combine_sylow_witness(&parts, 2, &witness, &lim).unwrap();
        assert_eq!(combined.degree(), 9);
        assert_eq!(combined.order(), 12);
        assert_eq!(k_closure(&combined, 2, &lim).unwrap().order(), 24);

        let single = sylow_parts(&sylow_decomposition(&g("4: (1 2), (3 4)")).unwrap());
        assert!(combine_sylow_witness(&single, 2, &witness, &lim)
            .unwrap()
            .same_group(&witness));
        assert!(combine_sylow_witness(&parts, 5, &witness, &lim).is_err());
        assert!(combine_sylow_witness(&parts, 3, &witness, &lim).is_err());
    }

    #[test]
    fn all_regular_parts_are_two_closed() {
        let lim = Limits::default();
        let grp = g("6: (1 2 3 4 5 6)");
        let d = sylow_decomposition(&grp).unwrap();
        let parts = sylow_parts(&d);
        let reg2 =
            regular_representation(&cayley_table(&d.component(2).unwrap().group, &lim).unwrap());
        let combined = combine_sylow_witness(&parts, 2, &reg2, &lim).unwrap();
        assert_eq!(combined.degree(), 5);
        assert!(is_k_closed(&combined, 2, &lim).unwrap());
    }

    #[test]
    fn product_formula_examples() {
        let lim = Limits::default();
        assert!(verify_chnl_product(&g("6: (1 2 3 4 5 6)"), 2, &lim).unwrap());
        assert!(verify_chnl_product(&g("6: (1 2), (3 4 5 6)"), 2, &lim).unwrap());
        assert!(verify_chnl_product(&g("4: (1 2 3 4), (1 3)"), 2, &lim).unwrap());
        assert!(matches!(
            verify_chnl_product(&g("3: (1 2 3), (1 2)"), 2, &lim),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn verdict_json() {
        let v = Verdict::ExhaustedBound {
            max_degree: 8,
            representations_checked: 3,
        };
        assert_eq!(v.to_json()["kind"], "exhausted-bound");
    }
}
