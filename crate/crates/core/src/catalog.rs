//! Named test groups with their expected properties.

use serde_json::{json, Value};

use crate::bsgs::{regular_representation, GeneratedGroup};
use crate::limits::Limits;
use crate::totality::cayley_table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub order: u64,
    pub abelian: bool,
    pub nilpotent: bool,
    /// `n(G)` for abelian groups.
    pub invariant_factors: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Value,
    pub group: GeneratedGroup,
    pub expected: Expected,
}

impl CatalogEntry {
    fn new(
        name: impl Into<String>,
        params: Value,
        group: GeneratedGroup,
        expected: Expected,
    ) -> Self {
        CatalogEntry {
            name: name.into(),
            params,
            group,
            expected,
        }
    }

    pub fn order(&self) -> u64 {
        self.expected.order
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// Order is a prime power `p^m` with `m >= 1`; returns `(p, m)`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match crate::structure::factorize(self.order()).as_slice() {
            [(p, m)] => Some((*p, *m)),
            _ => None,
        }
    }
}

fn spec(s: &str) -> GeneratedGroup {
    GeneratedGroup::parse(s).expect("catalog spec")
}

fn abelian(order: u64, n: usize) -> Expected {
    Expected {
        order,
        abelian: true,
        nilpotent: true,
        invariant_factors: Some(n),
    }
}

fn nonabelian(order: u64, nilpotent: bool) -> Expected {
    Expected {
        order,
        abelian: false,
        nilpotent,
        invariant_factors: None,
    }
}

/// `⟨(1 … p), (p+1 … 2p), …⟩`: `k` disjoint p-cycles.
fn disjoint_cycles(p: usize, k: usize) -> GeneratedGroup {
    let degree = p * k;
    let gens = (0..k)
        .map(|i| {
            let cycle: Vec<usize> = (i * p..(i + 1) * p).collect();
            crate::perm::Permutation::from_cycles(degree, &[&cycle]).unwrap()
        })
        .collect();
    GeneratedGroup::new(degree, gens).unwrap()
}

fn cyclic(n: usize) -> GeneratedGroup {
    if n == 1 {
        return GeneratedGroup::trivial(1);
    }
    let cycle: Vec<usize> = (0..n).collect();
    GeneratedGroup::new(
        n,
        vec![crate::perm::Permutation::from_cycles(n, &[&cycle]).unwrap()],
    )
    .unwrap()
}

fn regular_of(g: &GeneratedGroup) -> GeneratedGroup {
    let limits = Limits::default();
    regular_representation(&cayley_table(g, &limits).expect("small group"))
}

/// The fixed test catalog, in a stable order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=12usize {
        let factors = if n == 1 { 0 } else { 1 };
        out.push(CatalogEntry::new(
            format!("Z{n}"),
            json!({"n": n, "action": "regular"}),
            cyclic(n),
            abelian(n as u64, factors),
        ));
    }
    for (p, kmax) in [(2usize, 3usize), (3, 3)] {
        for k in 2..=kmax {
            let intransitive = disjoint_cycles(p, k);
            out.push(CatalogEntry::new(
                format!("Z{p}^{k}-regular"),
                json!({"p": p, "k": k, "action": "regular"}),
                regular_of(&intransitive),
                abelian((p as u64).pow(k as u32), k),
            ));
        }
        for k in 1..=kmax {
            out.push(CatalogEntry::new(
                format!("Z{p}^{k}-paper"),
                json!({"p": p, "k": k, "action": "disjoint cycles"}),
                disjoint_cycles(p, k),
                abelian((p as u64).pow(k as u32), k),
            ));
        }
    }
    out.push(CatalogEntry::new(
        "Z2xZ4",
        json!({"action": "disjoint cycles"}),
        spec("6: (1 2), (3 4 5 6)"),
        abelian(8, 2),
    ));
    out.push(CatalogEntry::new(
        "Z6-deg5",
        json!({"action": "one 3-cycle and one transposition"}),
        spec("5: (1 2 3)(4 5)"),
        abelian(6, 1),
    ));
    out.push(CatalogEntry::new(
        "V4-deg6",
        json!({"action": "cosets of the three subgroups of order 2"}),
        spec("6: (3 4)(5 6), (1 2)(5 6)"),
        abelian(4, 2),
    ));
    out.push(CatalogEntry::new(
        "Z2^2xZ3",
        json!({"action": "disjoint cycles"}),
        spec("7: (1 2), (3 4), (5 6 7)"),
        abelian(12, 2),
    ));
    out.push(CatalogEntry::new(
        "D8",
        json!({"action": "natural"}),
        spec("4: (1 2 3 4), (1 3)"),
        nonabelian(8, true),
    ));
    out.push(CatalogEntry::new(
        "Q8",
        json!({"action": "regular"}),
        spec("8: (1 2 4 7)(3 6 8 5), (1 3 4 8)(2 5 7 6)"),
        nonabelian(8, true),
    ));
    let mut d8 = String::from("(1 2 3 4), (1 3)");
    for k in 1..=2usize {
        d8.push_str(&format!(", ({} {})", 2 * k + 3, 2 * k + 4));
        let name = if k == 1 {
            "D8xZ2-paper".to_string()
        } else {
            format!("D8xZ2^{k}-paper")
        };
        out.push(CatalogEntry::new(
            name,
            json!({"k": k, "action": "natural D8 plus transpositions"}),
            spec(&format!("{}: {}", 2 * k + 4, d8)),
            nonabelian(1 << (k + 3), true),
        ));
    }
    out.push(CatalogEntry::new(
        "D8xZ3",
        json!({"action": "natural D8 plus a 3-cycle"}),
        spec("7: (1 2 3 4), (1 3), (5 6 7)"),
        nonabelian(24, true),
    ));
    out.push(CatalogEntry::new(
        "Sym3",
        json!({"action": "natural"}),
        spec("3: (1 2 3), (1 2)"),
        nonabelian(6, false),
    ));
    out
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
