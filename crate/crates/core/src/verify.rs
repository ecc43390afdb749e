//! Invariant suites run over the catalog.
//!
//! Each tag runs one invariant suite and yields a [`VerificationReport`]
//! with one [`CaseResult`] per (group, parameters) pair. Case order is fixed
//! by the catalog order, so reports are reproducible byte for byte apart
//! from `wall_clock_ms`.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bsgs::regular_representation;
use crate::catalog::{catalog, CatalogEntry};
use crate::closure::{is_k_closed, k_closure, k_closure_naive_elements};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structure::{
    base_number, greedy_base, invariant_factor_count, is_elementary_abelian, sylow_decomposition,
};
use crate::totality::{
    cayley_table, classify, combine_sylow_witness, faithful_representations,
    probe_totally_k_closed, sylow_parts, theorem_b_classify, Verdict,
};

pub const TAGS: &[&str] = &[
    "eq1",
    "wielandt",
    "lemma-base",
    "chnl",
    "theorem-a",
    "theorem-b",
    "cpr",
    "lemma-na",
    "regular-2closed",
    "oracle-equivalence",
];

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub theorem: String,
    pub group: String,
    pub params: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    /// `pass`, `fail` or `cap-exceeded`.
    pub outcome: &'static str,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub cap_exceeded: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub pass: bool,
    pub summary: Summary,
    pub cases: Vec<CaseResult>,
    pub wall_clock_ms: u64,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "== {} : {} ({} cases, {} passed, {} failed, {} over cap)\n",
            self.theorem,
            if self.pass { "PASS" } else { "FAIL" },
            self.summary.cases,
            self.summary.passed,
            self.summary.failed,
            self.summary.cap_exceeded
        );
        for c in &self.cases {
            s.push_str(&format!(
                "  [{}] {:<16} {} -> {}\n",
                match c.outcome {
                    "pass" => "PASS",
                    "fail" => "FAIL",
                    _ => "CAP ",
                },
                c.group,
                c.params,
                c.computed
            ));
        }
        s
    }
}

/// Knobs for the suites. `None` means the suite's own default.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub limits: Limits,
    /// Degree bound for representation probes (default 12).
    pub max_degree: Option<usize>,
    /// Largest group order fed to the representation probes (default 16).
    pub max_order: Option<u64>,
    /// Restrict suites that range over k to this single value.
    pub k: Option<usize>,
}

impl VerifyOptions {
    fn ks(&self, default: &[usize]) -> Vec<usize> {
        match self.k {
            Some(k) => vec![k],
            None => default.to_vec(),
        }
    }

    fn probe_bound(&self) -> usize {
        self.max_degree.unwrap_or(12)
    }

    fn probe_order(&self) -> u64 {
        self.max_order.unwrap_or(16)
    }

    /// Limits with the closure search widened to cover `degree`.
    fn limits_for(&self, degree: usize) -> Limits {
        let mut l = self.limits;
        l.max_search_degree = l.max_search_degree.max(degree);
        l
    }
}

struct Suite {
    theorem: &'static str,
    cases: Vec<CaseResult>,
}

impl Suite {
    fn new(theorem: &'static str) -> Self {
        Suite {
            theorem,
            cases: Vec::new(),
        }
    }

    fn case(
        &mut self,
        entry: &CatalogEntry,
        extra: Value,
        expected: Value,
        run: impl FnOnce() -> Result<(Value, bool)>,
    ) {
        let mut params = entry.params.clone();
        if let (Some(p), Some(e)) = (params.as_object_mut(), extra.as_object()) {
            for (k, v) in e {
                p.insert(k.clone(), v.clone());
            }
        }
        let (computed, pass, outcome) = match run() {
            Ok((computed, pass)) => (computed, pass, if pass { "pass" } else { "fail" }),
            Err(e @ Error::CapExceeded { .. }) => {
                (json!({ "error": e.to_string() }), false, "cap-exceeded")
            }
            Err(e) => (json!({ "error": e.to_string() }), false, "fail"),
        };
        self.cases.push(CaseResult {
            theorem: self.theorem.to_string(),
            group: entry.name.clone(),
            params,
            expected,
            computed,
            pass,
            outcome,
        });
    }

    fn finish(self, started: Instant) -> VerificationReport {
        let mut summary = Summary {
            cases: self.cases.len(),
            ..Summary::default()
        };
        for c in &self.cases {
            match c.outcome {
                "pass" => summary.passed += 1,
                "cap-exceeded" => summary.cap_exceeded += 1,
                _ => summary.failed += 1,
            }
        }
        VerificationReport {
            theorem: self.theorem.to_string(),
            pass: summary.failed == 0 && summary.cap_exceeded == 0,
            summary,
            cases: self.cases,
            wall_clock_ms: started.elapsed().as_millis() as u64,
        }
    }
}

/// Runs the suite for `tag`.
pub fn verify(tag: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let suite = match tag {
        "eq1" => eq1(opts),
        "wielandt" => wielandt(opts),
        "lemma-base" => lemma_base(opts),
        "chnl" => chnl(opts),
        "theorem-a" => theorem_a(opts),
        "theorem-b" => theorem_b(opts),
        "cpr" => cpr(opts),
        "lemma-na" => lemma_na(opts),
        "regular-2closed" => regular_two_closed(opts),
        "oracle-equivalence" => oracle_equivalence(opts),
        other => return Err(Error::UnknownTag(other.to_string())),
    };
    Ok(suite.finish(started))
}

pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    TAGS.iter()
        .map(|t| verify(t, opts).expect("known tag"))
        .collect()
}

fn eq1(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("eq1");
    let lim = opts.limits;
    for e in catalog().iter().filter(|e| e.degree() <= 10) {
        for k in opts.ks(&[2, 3]).into_iter().filter(|&k| k >= 2) {
            s.case(
                e,
                json!({"k": k}),
                json!({"chain": "G <= G^(k) <= G^(k-1)"}),
                || {
                    let ck = k_closure(&e.group, k, &lim)?;
                    let ck1 = k_closure(&e.group, k - 1, &lim)?;
                    let lower = e.group.is_subgroup_of(&ck);
                    let upper = ck.is_subgroup_of(&ck1);
                    Ok((
                        json!({
                            "order": e.group.order(),
                            "closure_k": ck.order(),
                            "closure_k_minus_1": ck1.order(),
                            "g_in_closure_k": lower,
                            "closure_k_in_closure_k_minus_1": upper,
                        }),
                        lower && upper,
                    ))
                },
            );
        }
    }
    s
}

fn oracle_equivalence(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("oracle-equivalence");
    let lim = opts.limits;
    for e in catalog().iter().filter(|e| e.degree() <= 7) {
        for k in opts.ks(&[1, 2, 3]) {
            s.case(
                e,
                json!({"k": k}),
                json!({"identical_element_sets": true}),
                || {
                    let fast = k_closure(&e.group, k, &lim)?;
                    let fast_set: BTreeSet<_> = fast.elements(&lim)?.collect();
                    let naive: BTreeSet<_> = k_closure_naive_elements(&e.group, k, &lim)?
                        .into_iter()
                        .collect();
                    let same = fast_set == naive;
                    Ok((
                        json!({
                            "search_order": fast_set.len(),
                            "naive_order": naive.len(),
                            "identical_element_sets": same,
                        }),
                        same,
                    ))
                },
            );
        }
    }
    s
}

/// Base sizes stated for the explicit families, with the base they name
/// (1-based points).
fn family_base(entry: &CatalogEntry) -> Option<(usize, Vec<usize>)> {
    let name = entry.name.as_str();
    if let Some(rest) = name
        .strip_prefix("Z2^")
        .and_then(|r| r.strip_suffix("-paper"))
    {
        let k: usize = rest.parse().ok()?;
        return Some((k, (1..=k).map(|i| 2 * i).collect()));
    }
    if let Some(rest) = name
        .strip_prefix("Z3^")
        .and_then(|r| r.strip_suffix("-paper"))
    {
        let k: usize = rest.parse().ok()?;
        return Some((k, (0..k).map(|i| 3 * i + 1).collect()));
    }
    let k = match name {
        "D8xZ2-paper" => 1,
        "D8xZ2^2-paper" => 2,
        _ => return None,
    };
    let mut base = vec![1, 2];
    base.extend((1..=k).map(|i| 2 * i + 4));
    Some((k + 2, base))
}

fn lemma_base(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("lemma-base");
    let lim = opts.limits;
    for e in catalog().iter() {
        let Some((p, m)) = e.prime_power() else {
            continue;
        };
        let m = m as usize;
        let nonabelian = !e.expected.abelian;
        let bound = if nonabelian { m - 1 } else { m };
        let family = family_base(e);
        let expected = match &family {
            Some((b, _)) => json!({"base_number_at_most": bound, "base_number": b}),
            None => json!({"base_number_at_most": bound}),
        };
        s.case(e, json!({"p": p, "log_p_order": m}), expected, || {
            let greedy = greedy_base(&e.group).len();
            // Past the exact-search cap the greedy length still bounds b(G) from above.
            let (b, exact) = match base_number(&e.group, &lim) {
                Ok(b) => (b, true),
                Err(Error::CapExceeded { .. }) if family.is_none() => (greedy, false),
                Err(err) => return Err(err),
            };
            let mut pass = b <= bound && greedy >= b && greedy <= m;
            let mut computed = json!({
                "base_number": if exact { json!(b) } else { Value::Null },
                "base_number_upper_bound": b,
                "greedy_base_length": greedy,
                "nonabelian": nonabelian,
            });
            if let Some((want, points)) = &family {
                let zero: Vec<usize> = points.iter().map(|x| x - 1).collect();
                let is_base = e.group.pointwise_stabilizer(&zero)?.order() == 1;
                pass &= b == *want && is_base && b == bound;
                computed["listed_base"] = json!(points);
                computed["listed_base_is_base"] = json!(is_base);
            }
            Ok((computed, pass))
        });
    }
    s
}

fn wielandt(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("wielandt");
    for e in catalog().iter().filter(|e| e.degree() <= 10) {
        let lim = opts.limits_for(10);
        s.case(
            e,
            json!({}),
            json!({"closed_at_base_number_plus_one": true}),
            || {
                let b = base_number(&e.group, &lim)?;
                let closed = is_k_closed(&e.group, b + 1, &lim)?;
                Ok((
                    json!({"base_number": b, "k": b + 1, "k_closed": closed}),
                    closed,
                ))
            },
        );
    }
    s
}

fn regular_two_closed(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("regular-2closed");
    let lim = opts.limits;
    for e in catalog().iter().filter(|e| e.order() <= 12) {
        s.case(e, json!({"k": 2}), json!({"two_closed": true}), || {
            let reg = regular_representation(&cayley_table(&e.group, &lim)?);
            let closed = is_k_closed(&reg, 2, &lim)?;
            Ok((
                json!({"degree": reg.degree(), "regular": reg.is_regular(), "two_closed": closed}),
                closed && reg.is_regular(),
            ))
        });
    }
    s
}

fn chnl(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("chnl");
    let lim = opts.limits;
    for e in catalog().iter().filter(|e| e.degree() <= 10) {
        for k in opts.ks(&[2, 3]) {
            if e.expected.nilpotent {
                s.case(e, json!({"k": k}), json!({"product_formula": true}), || {
                    let ok = crate::totality::verify_chnl_product(&e.group, k, &lim)?;
                    Ok((json!({"product_formula": ok}), ok))
                });
            } else {
                s.case(
                    e,
                    json!({"k": k}),
                    json!({"error": "not nilpotent"}),
                    || match crate::totality::verify_chnl_product(&e.group, k, &lim) {
                        Err(Error::NotNilpotent(_)) => {
                            Ok((json!({"error": "not nilpotent"}), true))
                        }
                        Err(err) => Err(err),
                        Ok(v) => Ok((json!({"product_formula": v}), false)),
                    },
                );
            }
        }
    }
    s
}

fn closed_flag(v: &Verdict) -> Option<bool> {
    match v {
        Verdict::TheoremDecided { totally_closed, .. } => Some(*totally_closed),
        _ => None,
    }
}

fn theorem_a(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("theorem-a");
    let bound = opts.probe_bound();
    let lim = opts.limits_for(bound);
    for e in catalog().iter().filter(|e| e.expected.nilpotent) {
        let Ok(decomposition) = sylow_decomposition(&e.group) else {
            continue;
        };
        if decomposition.components.len() < 2 {
            continue;
        }
        let combine_lim =
            lim.with_search_degree(lim.max_search_degree.max(bound + e.order() as usize));
        for k in opts.ks(&[2, 3]) {
            for c in &decomposition.components {
                if c.order() > opts.probe_order() {
                    continue;
                }
                s.case(
                    e,
                    json!({"k": k, "q": c.prime, "max_degree": bound}),
                    json!({"combined_is_faithful": true, "combined_k_closed": false}),
                    || {
                        let table = cayley_table(&c.group, &lim)?;
                        let verdict = probe_totally_k_closed(&table, k, bound, &lim)?;
                        let Verdict::WitnessFound {
                            representation,
                            closure_order,
                        } = verdict
                        else {
                            return Ok((json!({"sylow_witness": false}), true));
                        };
                        let parts = sylow_parts(&decomposition);
                        let combined =
                            combine_sylow_witness(&parts, c.prime, &representation, &combine_lim)?;
                        let faithful = combined.order() == e.order();
                        let hull = k_closure(&combined, k, &combine_lim)?;
                        let product = closure_order * (e.order() / c.order());
                        let pass = faithful && hull.order() > e.order() && hull.order() == product;
                        Ok((
                            json!({
                                "sylow_witness": true,
                                "witness": representation.to_string(),
                                "combined": combined.to_string(),
                                "combined_degree": combined.degree(),
                                "combined_order": combined.order(),
                                "combined_closure_order": hull.order(),
                                "closure_product_order": product,
                            }),
                            pass,
                        ))
                    },
                );
            }
        }
    }
    s
}

fn theorem_b(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("theorem-b");
    let bound = opts.probe_bound();
    for e in catalog()
        .iter()
        .filter(|e| e.expected.nilpotent && e.order() <= opts.probe_order())
    {
        for k in opts.ks(&[2, 3]) {
            let Ok(verdict) = classify(&e.group, k, &opts.limits) else {
                continue;
            };
            let closed = closed_flag(&verdict).expect("theorem verdict");
            let mut bounds = vec![bound];
            let named = matches!((e.name.as_str(), k), ("D8", 3) | ("Q8", 2));
            if named && opts.max_degree.is_none() {
                bounds = vec![16];
            }
            for b in bounds {
                let lim = opts.limits_for(b);
                s.case(
                    e,
                    json!({"k": k, "max_degree": b}),
                    json!({"totally_closed": closed, "probe": if closed { "exhausted-bound" } else { "witness-found" }}),
                    || {
                        let table = cayley_table(&e.group, &lim)?;
                        let probe = probe_totally_k_closed(&table, k, b, &lim)?;
                        let agree = probe.is_witness() != closed;
                        Ok((json!({"theorem": verdict.to_json(), "probe": probe.to_json()}), agree))
                    },
                );
            }
        }
    }
    s
}

fn cpr(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("cpr");
    let bound = opts.probe_bound();
    let lim = opts.limits_for(bound);
    for e in catalog()
        .iter()
        .filter(|e| e.expected.abelian && e.order() > 1 && e.order() <= opts.probe_order())
    {
        let n = e.expected.invariant_factors.unwrap_or(0);
        for (k, witness) in [(n, true), (n + 1, false)] {
            s.case(
                e,
                json!({"k": k, "max_degree": bound}),
                json!({"n": n, "probe": if witness { "witness-found" } else { "exhausted-bound" }}),
                || {
                    let computed_n = invariant_factor_count(&e.group, &lim)?;
                    let table = cayley_table(&e.group, &lim)?;
                    let probe = probe_totally_k_closed(&table, k, bound, &lim)?;
                    let pass = computed_n == n && probe.is_witness() == witness;
                    Ok((json!({"n": computed_n, "probe": probe.to_json()}), pass))
                },
            );
        }
    }
    s
}

fn lemma_na(opts: &VerifyOptions) -> Suite {
    let mut s = Suite::new("lemma-na");
    let bound = opts.probe_bound();
    let lim = opts.limits_for(bound);
    for e in catalog()
        .iter()
        .filter(|e| !e.expected.abelian && e.order() <= opts.probe_order())
    {
        let Some((p, m)) = e.prime_power() else {
            continue;
        };
        let k = m as usize;
        s.case(
            e,
            json!({"p": p, "k": k, "max_degree": bound}),
            json!({"totally_closed": true, "base_number_at_most": k - 1, "all_k_closed": true}),
            || {
                let verdict = theorem_b_classify(&e.group, k)?;
                let decided = closed_flag(&verdict) == Some(true);
                let table = cayley_table(&e.group, &lim)?;
                let mut reps = 0;
                let mut max_base = 0;
                let mut all_closed = true;
                for rep in faithful_representations(&table, bound, &lim)? {
                    reps += 1;
                    max_base = max_base.max(base_number(&rep.group, &lim)?);
                    all_closed &= is_k_closed(&rep.group, k, &lim)?;
                }
                let elementary = is_elementary_abelian(&e.group, p);
                let pass = decided && !elementary && max_base < k && all_closed;
                Ok((
                    json!({
                        "theorem": verdict.to_json(),
                        "representations": reps,
                        "max_base_number": max_base,
                        "all_k_closed": all_closed,
                    }),
                    pass,
                ))
            },
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_tag() {
        assert!(matches!(
            verify("nope", &VerifyOptions::default()),
            Err(Error::UnknownTag(_))
        ));
    }

    #[test]
    fn lemma_base_passes() {
        let r = verify("lemma-base", &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert!(r
            .cases
            .iter()
            .any(|c| c.group == "D8xZ2^2-paper" && c.computed["base_number"] == 4));
    }

    #[test]
    fn cap_exceeded_is_reported_per_case() {
        let opts = VerifyOptions {
            limits: Limits {
                max_base_degree: 5,
                ..Limits::default()
            },
            ..VerifyOptions::default()
        };
        let r = verify("lemma-base", &opts).unwrap();
        assert!(!r.pass);
        assert!(r.summary.cap_exceeded > 0);
        assert!(r.summary.passed > 0);
    }
}
