//! Element orders, p-parts, Sylow decompositions, bases and abelian ranks.

use num_integer::Integer;

use crate::bsgs::GeneratedGroup;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Permutation;

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Prime factorization in increasing order of primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some(e)` when `n == p^e`.
pub fn prime_power_exponent(n: u64, p: u64) -> Option<u32> {
    let mut n = n;
    let mut e = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        e += 1;
    }
    Some(e)
}

/// Least common multiple of the cycle lengths.
pub fn element_order(p: &Permutation) -> u64 {
    p.cycles()
        .iter()
        .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
}

/// The power `x^a` of p-power order, with `a ≡ 1 (mod p^e)` and
/// `a ≡ 0 (mod m')` where `element_order(x) = p^e m'`.
pub fn p_part(x: &Permutation, p: u64) -> Result<Permutation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = element_order(x);
    let mut pe = 1;
    while m.is_multiple_of(pe * p) {
        pe *= p;
    }
    if pe == 1 {
        return Ok(Permutation::identity(x.degree()));
    }
    let rest = m / pe;
    let a = if rest == 1 {
        1
    } else {
        // rest * (rest^-1 mod pe)
        let inv = (rest as i128)
            .extended_gcd(&(pe as i128))
            .x
            .rem_euclid(pe as i128) as u64;
        rest * inv
    };
    Ok(x.pow(a))
}

#[derive(Debug, Clone)]
pub struct SylowComponent {
    pub prime: u64,
    pub exponent: u32,
    pub group: GeneratedGroup,
}

impl SylowComponent {
    pub fn order(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// Sylow subgroups of a nilpotent group, by increasing prime.
#[derive(Debug, Clone)]
pub struct SylowDecomposition {
    pub components: Vec<SylowComponent>,
}

impl SylowDecomposition {
    pub fn primes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.prime).collect()
    }

    pub fn component(&self, p: u64) -> Option<&SylowComponent> {
        self.components.iter().find(|c| c.prime == p)
    }
}

/// Splits a nilpotent group into its Sylow subgroups.
///
/// The candidate Sylow p-subgroup is generated by the p-parts of the
/// generators. The group is the internal direct product of these candidates
/// (hence nilpotent) iff each is a p-group, their orders multiply to `|G|`,
/// and generators of different candidates commute. Any failure is reported
/// as [`Error::NotNilpotent`].
pub fn sylow_decomposition(g: &GeneratedGroup) -> Result<SylowDecomposition> {
    let order = g.order();
    let mut components = Vec::new();
    for (p, _) in factorize(order) {
        let gens: Vec<Permutation> = g
            .nontrivial_generators()
            .iter()
            .map(|s| p_part(s, p))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|x| !x.is_identity())
            .collect();
        let group = GeneratedGroup::new(g.degree(), gens)?;
        let exponent = prime_power_exponent(group.order(), p).ok_or_else(|| {
            Error::NotNilpotent(format!("{p}-part subgroup has order {}", group.order()))
        })?;
        components.push(SylowComponent {
            prime: p,
            exponent,
            group,
        });
    }
    let product: u64 = components.iter().map(|c| c.order()).product();
    if product != order {
        return Err(Error::NotNilpotent(format!(
            "component orders multiply to {product}, group order is {order}"
        )));
    }
    for (i, a) in components.iter().enumerate() {
        for b in &components[i + 1..] {
            let commute = a
                .group
                .generators()
                .iter()
                .all(|x| b.group.generators().iter().all(|y| x.commutes_with(y)));
            if !commute {
                return Err(Error::NotNilpotent(format!(
                    "Sylow {}- and {}-components do not commute",
                    a.prime, b.prime
                )));
            }
        }
    }
    Ok(SylowDecomposition { components })
}

pub fn is_nilpotent(g: &GeneratedGroup) -> bool {
    sylow_decomposition(g).is_ok()
}

/// Base from the stabilizer chain: repeatedly the smallest point moved by
/// the current stabilizer. 0-based.
pub fn greedy_base(g: &GeneratedGroup) -> Vec<usize> {
    g.chain().base()
}

/// A base of minimum size.
///
/// Iterative deepening over irredundant point sequences; at each node only
/// the smallest point of each nontrivial orbit of the current stabilizer is
/// tried, since points in one orbit have conjugate stabilizers.
pub fn minimal_base(g: &GeneratedGroup, limits: &Limits) -> Result<Vec<usize>> {
    if g.degree() > limits.max_base_degree {
        return Err(Error::cap(
            "exact base search degree",
            g.degree() as u64,
            limits.max_base_degree as u64,
        ));
    }
    let upper = greedy_base(g);
    for depth in 0..upper.len() {
        let mut path = Vec::new();
        if base_search(g, depth, &mut path) {
            return Ok(path);
        }
    }
    Ok(upper)
}

fn base_search(h: &GeneratedGroup, depth: usize, path: &mut Vec<usize>) -> bool {
    if h.order() == 1 {
        return true;
    }
    if depth == 0 {
        return false;
    }
    for orbit in h.orbits() {
        if orbit.len() < 2 {
            continue;
        }
        let point = orbit[0];
        let stab = h.point_stabilizer(point).expect("point in range");
        path.push(point);
        if base_search(&stab, depth - 1, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Minimum base size `b(G)`.
pub fn base_number(g: &GeneratedGroup, limits: &Limits) -> Result<usize> {
    Ok(minimal_base(g, limits)?.len())
}

/// Number of invariant factors of an abelian group: its largest p-rank,
/// with `p^rank = |{x : x^p = 1}|` for the Sylow p-subgroup.
pub fn invariant_factor_count(g: &GeneratedGroup, limits: &Limits) -> Result<usize> {
    if !g.is_abelian() {
        return Err(Error::NonAbelianInput);
    }
    let primes: Vec<u64> = factorize(g.order()).into_iter().map(|(p, _)| p).collect();
    if primes.is_empty() {
        return Ok(0);
    }
    let mut counts = vec![0u64; primes.len()];
    for x in g.elements(limits)? {
        for (i, &p) in primes.iter().enumerate() {
            if x.pow(p).is_identity() {
                counts[i] += 1;
            }
        }
    }
    Ok(primes
        .iter()
        .zip(&counts)
        .map(|(&p, &c)| {
            prime_power_exponent(c, p).expect("solutions of x^p = 1 form a p-group") as usize
        })
        .max()
        .unwrap_or(0))
}

/// Abelian, of p-power order, and generated by elements of order dividing p.
pub fn is_elementary_abelian(g: &GeneratedGroup, p: u64) -> bool {
    is_prime(p)
        && g.is_abelian()
        && prime_power_exponent(g.order(), p).is_some()
        && g.generators().iter().all(|s| s.pow(p).is_identity())
}
