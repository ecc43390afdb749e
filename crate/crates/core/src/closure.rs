//! Orbit colorings of `Ω^k` and the Wielandt k-closure.
//!
//! The k-closure of `G ≤ Sym(Ω)` is the set of permutations of `Ω` that map
//! every `G`-orbit on ordered k-tuples onto itself. Two routes compute it:
//! a backtracking search that builds the closure stabilizer by stabilizer,
//! and a naive filter over all of `Sym(Ω)` used as an oracle.

use itertools::Itertools;

use crate::bsgs::{reduce_generators, GeneratedGroup};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Permutation;

/// Color of every k-tuple over `{0..n-1}`, the tuple encoded in base `n`
/// with the first coordinate most significant. A tuple's color is the
/// smallest code in its `G`-orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitColoring {
    degree: usize,
    arity: usize,
    colors: Vec<u32>,
}

impl OrbitColoring {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &x| acc * self.degree + x)
    }

    pub fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut t = vec![0; self.arity];
        for slot in t.iter_mut().rev() {
            *slot = code % self.degree;
            code /= self.degree;
        }
        t
    }

    pub fn color(&self, tuple: &[usize]) -> u32 {
        self.colors[self.encode(tuple)]
    }

    pub fn color_of_code(&self, code: usize) -> u32 {
        self.colors[code]
    }

    pub fn num_colors(&self) -> usize {
        self.colors
            .iter()
            .enumerate()
            .filter(|(i, &c)| *i as u32 == c)
            .count()
    }

    /// All tuples sharing the color of `tuple`, in code order.
    pub fn orbit_of(&self, tuple: &[usize]) -> Vec<Vec<usize>> {
        let c = self.color(tuple);
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(i, _)| self.decode(i))
            .collect()
    }

    /// Whether `h` maps every tuple to one of the same color.
    pub fn is_preserved_by(&self, h: &Permutation) -> bool {
        if h.degree() != self.degree {
            return false;
        }
        let n = self.degree;
        let k = self.arity;
        // image code computed digit by digit
        (0..self.colors.len()).all(|code| {
            let mut rest = code;
            let mut image = 0;
            let mut scale = 1;
            for _ in 0..k {
                image += h.apply(rest % n) * scale;
                rest /= n;
                scale *= n;
            }
            self.colors[image] == self.colors[code]
        })
    }
}

fn tuple_cells(n: usize, k: usize, limits: &Limits) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let cells = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if cells > limits.max_tuple_cells as u128 {
        return Err(Error::cap(
            "tuple table cells",
            cells,
            limits.max_tuple_cells,
        ));
    }
    Ok(cells as usize)
}

/// Canonical coloring of `Ω^k` by `G`-orbits.
pub fn tuple_orbits(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<OrbitColoring> {
    let n = g.degree();
    let cells = tuple_cells(n, k, limits)?;
    let gens = g.nontrivial_generators();
    let mut colors = vec![u32::MAX; cells];
    let mut stack = Vec::new();
    let mut digits = vec![0usize; k];
    for code in 0..cells {
        if colors[code] != u32::MAX {
            continue;
        }
        colors[code] = code as u32;
        stack.push(code);
        while let Some(c) = stack.pop() {
            let mut rest = c;
            for d in digits.iter_mut().rev() {
                *d = rest % n;
                rest /= n;
            }
            for s in &gens {
                let image = digits.iter().fold(0, |acc, &x| acc * n + s.apply(x));
                if colors[image] == u32::MAX {
                    colors[image] = code as u32;
                    stack.push(image);
                }
            }
        }
    }
    Ok(OrbitColoring {
        degree: n,
        arity: k,
        colors,
    })
}

/// Backtracking search for color-preserving permutations. Points are
/// assigned in increasing order; after assigning point `j` every tuple over
/// `{0..=j}` that contains `j` must keep its color.
struct Search<'a> {
    coloring: &'a OrbitColoring,
    n: usize,
    k: usize,
    point_color: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(coloring: &'a OrbitColoring) -> Self {
        let n = coloring.degree;
        let k = coloring.arity;
        let point_color = (0..n).map(|x| coloring.color(&vec![x; k])).collect();
        Search {
            coloring,
            n,
            k,
            point_color,
        }
    }

    fn consistent(&self, images: &[usize], j: usize, digits: &mut [usize]) -> bool {
        let n = self.n;
        let span = j + 1;
        let total = span.pow(self.k as u32);
        for idx in 0..total {
            let mut rest = idx;
            let mut has_j = false;
            for d in digits.iter_mut() {
                *d = rest % span;
                rest /= span;
                has_j |= *d == j;
            }
            if !has_j {
                continue;
            }
            let mut code = 0;
            let mut image = 0;
            for &d in digits.iter() {
                code = code * n + d;
                image = image * n + images[d];
            }
            if self.coloring.colors[code] != self.coloring.colors[image] {
                return false;
            }
        }
        true
    }

    /// A color-preserving permutation fixing `0..level` pointwise and
    /// sending `level` to `target`, if one exists.
    fn extend(&self, level: usize, target: usize) -> Option<Permutation> {
        if self.point_color[level] != self.point_color[target] {
            return None;
        }
        let mut images = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        for (x, slot) in images.iter_mut().enumerate().take(level) {
            *slot = x;
            used[x] = true;
        }
        if used[target] {
            return None;
        }
        let mut digits = vec![0; self.k];
        images[level] = target;
        used[target] = true;
        if !self.consistent(&images, level, &mut digits) {
            return None;
        }
        if self.assign(level + 1, &mut images, &mut used, &mut digits) {
            let im: Vec<u32> = images.iter().map(|&x| x as u32).collect();
            Some(Permutation::from_images(im).expect("search builds bijections"))
        } else {
            None
        }
    }

    fn assign(
        &self,
        j: usize,
        images: &mut [usize],
        used: &mut [bool],
        digits: &mut [usize],
    ) -> bool {
        if j == self.n {
            return true;
        }
        for c in 0..self.n {
            if used[c] || self.point_color[c] != self.point_color[j] {
                continue;
            }
            images[j] = c;
            used[c] = true;
            if self.consistent(images, j, digits) && self.assign(j + 1, images, used, digits) {
                return true;
            }
            used[c] = false;
        }
        images[j] = usize::MAX;
        false
    }
}

enum Outcome {
    Complete(Vec<Permutation>),
    Escaped(Permutation),
}

/// Builds generators of the closure level by level, from the deepest point
/// stabilizer up. At level `i` every point outside the current orbit of `i`
/// is tried as an image; `G`'s own strong generators seed each level. With
/// `stop_on_escape` the first element found outside `G` ends the search.
fn closure_search(g: &GeneratedGroup, coloring: &OrbitColoring, stop_on_escape: bool) -> Outcome {
    let n = g.degree();
    let search = Search::new(coloring);
    let mut gens: Vec<Permutation> = g.chain().strong_generators().to_vec();
    for i in (0..n).rev() {
        let level: Vec<&Permutation> = gens
            .iter()
            .filter(|s| (0..i).all(|x| s.apply(x) == x))
            .collect();
        let mut in_orbit = orbit_mask(n, i, &level);
        for target in i + 1..n {
            if in_orbit[target] {
                continue;
            }
            if let Some(h) = search.extend(i, target) {
                if stop_on_escape {
                    return Outcome::Escaped(h);
                }
                gens.push(h);
                let level: Vec<&Permutation> = gens
                    .iter()
                    .filter(|s| (0..i).all(|x| s.apply(x) == x))
                    .collect();
                in_orbit = orbit_mask(n, i, &level);
            }
        }
    }
    Outcome::Complete(gens)
}

fn orbit_mask(n: usize, point: usize, gens: &[&Permutation]) -> Vec<bool> {
    let mut mask = vec![false; n];
    mask[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = s.apply(x);
            if !mask[y] {
                mask[y] = true;
                stack.push(y);
            }
        }
    }
    mask
}

fn check_search_degree(g: &GeneratedGroup, limits: &Limits) -> Result<()> {
    if g.degree() > limits.max_search_degree {
        return Err(Error::cap(
            "closure search degree",
            g.degree() as u64,
            limits.max_search_degree as u64,
        ));
    }
    Ok(())
}

/// Canonical generators: scanning the group's elements in lexicographic
/// order of image sequences, keep each one that enlarges the group
/// generated so far. Groups too large to enumerate fall back to the same
/// scan over `candidates` only.
fn reduce_lex(degree: usize, mut candidates: Vec<Permutation>, limits: &Limits) -> GeneratedGroup {
    let group = GeneratedGroup::new(degree, candidates.clone()).expect("consistent degrees");
    if let Ok(elements) = group.elements(limits) {
        candidates = elements.collect();
    }
    candidates.sort();
    candidates.dedup();
    reduce_generators(degree, candidates)
}

/// The k-closure `G^(k)` with a deterministic reduced generating set.
pub fn k_closure(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<GeneratedGroup> {
    check_search_degree(g, limits)?;
    let coloring = tuple_orbits(g, k, limits)?;
    match closure_search(g, &coloring, false) {
        Outcome::Complete(gens) => Ok(reduce_lex(g.degree(), gens, limits)),
        Outcome::Escaped(_) => unreachable!("search without early exit"),
    }
}

/// Oracle: filters every element of `Sym(Ω)` against the coloring.
pub fn k_closure_naive(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<GeneratedGroup> {
    let accepted = k_closure_naive_elements(g, k, limits)?;
    Ok(reduce_generators(g.degree(), accepted))
}

/// Every color-preserving permutation, in lexicographic order of images.
pub fn k_closure_naive_elements(
    g: &GeneratedGroup,
    k: usize,
    limits: &Limits,
) -> Result<Vec<Permutation>> {
    let n = g.degree();
    if n > limits.max_naive_degree {
        return Err(Error::cap(
            "naive closure degree",
            n as u64,
            limits.max_naive_degree as u64,
        ));
    }
    let coloring = tuple_orbits(g, k, limits)?;
    Ok((0..n as u32)
        .permutations(n)
        .map(|im| Permutation::from_images(im).expect("permutation"))
        .filter(|h| coloring.is_preserved_by(h))
        .collect())
}

/// A color-preserving permutation outside `G`, if any.
pub fn k_closure_witness(
    g: &GeneratedGroup,
    k: usize,
    limits: &Limits,
) -> Result<Option<Permutation>> {
    check_search_degree(g, limits)?;
    let coloring = tuple_orbits(g, k, limits)?;
    Ok(match closure_search(g, &coloring, true) {
        Outcome::Complete(_) => None,
        Outcome::Escaped(h) => Some(h),
    })
}

/// `G^(k) == G`, exiting on the first color-preserving element outside `G`.
pub fn is_k_closed(g: &GeneratedGroup, k: usize, limits: &Limits) -> Result<bool> {
    Ok(k_closure_witness(g, k, limits)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;
    use std::collections::BTreeSet;

    fn g(spec: &str) -> GeneratedGroup {
        GeneratedGroup::parse(spec).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn orbit_of_pair_in_product_of_transpositions() {
        let c = tuple_orbits(&g("4: (1 2), (3 4)"), 2, &lim()).unwrap();
        assert_eq!(
            c.orbit_of(&[0, 2]),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        let klein = tuple_orbits(&g("6: (3 4)(5 6), (1 2)(5 6)"), 2, &lim()).unwrap();
        assert_eq!(
            klein.orbit_of(&[0, 2]),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
    }

    #[test]
    fn colors_are_smallest_codes() {
        let c = tuple_orbits(&g("3: (1 2 3)"), 2, &lim()).unwrap();
        // orbits of Z3 on pairs: 3 orbits of size 3
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.color(&[2, 2]), 0);
        assert_eq!(c.color(&[2, 0]), 1);
        assert_eq!(c.color(&[1, 0]), 2);
    }

    #[test]
    fn trivial_group_colors_every_tuple_apart() {
        let c = tuple_orbits(&GeneratedGroup::trivial(3), 3, &lim()).unwrap();
        assert_eq!(c.num_colors(), 27);
    }

    #[test]
    fn tuple_table_cap() {
        let small = Limits {
            max_tuple_cells: 100,
            ..lim()
        };
        assert!(matches!(
            tuple_orbits(&g("5: (1 2)"), 3, &small),
            Err(Error::CapExceeded { .. })
        ));
        assert!(tuple_orbits(&g("5: (1 2)"), 0, &lim()).is_err());
    }

    #[test]
    fn klein_four_on_six_points() {
        let v = g("6: (3 4)(5 6), (1 2)(5 6)");
        let c = k_closure(&v, 2, &lim()).unwrap();
        assert_eq!(c.order(), 8);
        assert!(c.same_group(&g("6: (1 2), (3 4), (5 6)")));
        let naive = k_closure_naive_elements(&v, 2, &lim()).unwrap();
        assert_eq!(naive.len(), 8);
        assert!(!is_k_closed(&v, 2, &lim()).unwrap());
        let w = k_closure_witness(&v, 2, &lim()).unwrap().unwrap();
        assert!(!v.contains(&w));
        // (1 2) alone preserves every 2-orbit
        let coloring = tuple_orbits(&v, 2, &lim()).unwrap();
        assert!(coloring.is_preserved_by(&parse_cycles("(1 2)", 6).unwrap()));
    }

    #[test]
    fn regular_cyclic_is_two_closed() {
        let c4 = g("4: (1 2 3 4)");
        assert_eq!(k_closure(&c4, 2, &lim()).unwrap().order(), 4);
        assert_eq!(k_closure_naive(&c4, 2, &lim()).unwrap().order(), 4);
        assert!(is_k_closed(&c4, 2, &lim()).unwrap());
    }

    #[test]
    fn one_closure_is_product_of_orbit_symmetric_groups() {
        assert_eq!(k_closure(&g("4: (1 2 3)"), 1, &lim()).unwrap().order(), 6);
        let c = k_closure(&g("10: (1 2 3 4 5 6 7 8 9 10)"), 1, &lim()).unwrap();
        assert_eq!(c.order(), 3_628_800);
    }

    #[test]
    fn symmetric_group_is_closed() {
        for k in 1..=3 {
            assert!(is_k_closed(&GeneratedGroup::symmetric(3), k, &lim()).unwrap());
            assert_eq!(
                k_closure(&GeneratedGroup::symmetric(5), k, &lim())
                    .unwrap()
                    .order(),
                120
            );
        }
    }

    #[test]
    fn naive_and_search_agree() {
        for spec in [
            "4: (1 2), (3 4)",
            "4: (1 2)(3 4)",
            "3: ()",
            "5: (1 2 3)(4 5)",
            "6: (1 2 3)(4 5 6)",
        ] {
            let grp = g(spec);
            for k in 1..=3 {
                let a = k_closure(&grp, k, &lim()).unwrap();
                let b: BTreeSet<_> = k_closure_naive_elements(&grp, k, &lim())
                    .unwrap()
                    .into_iter()
                    .collect();
                let a: BTreeSet<_> = a.elements(&lim()).unwrap().collect();
                assert_eq!(a, b, "{spec} k={k}");
            }
        }
        assert_eq!(
            k_closure_naive(&g("4: (1 2), (3 4)"), 2, &lim())
                .unwrap()
                .order(),
            4
        );
        assert!(k_closure_naive(&GeneratedGroup::trivial(3), 1, &lim())
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn double_transposition_two_closure() {
        // <(1 2)(3 4)> on 4 points: the naive filter is the oracle
        let grp = g("4: (1 2)(3 4)");
        let naive = k_closure_naive_elements(&grp, 2, &lim()).unwrap();
        let searched = k_closure(&grp, 2, &lim()).unwrap();
        assert_eq!(searched.order() as usize, naive.len());
        assert!(naive.iter().all(|h| searched.contains(h)));
    }

    #[test]
    fn caps() {
        let big = GeneratedGroup::symmetric(13);
        assert!(matches!(
            k_closure(&big, 2, &lim()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            k_closure_naive(&GeneratedGroup::symmetric(9), 1, &lim()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn reduced_generators_are_deterministic() {
        let v = g("6: (3 4)(5 6), (1 2)(5 6)");
        let a = k_closure(&v, 2, &lim()).unwrap().to_string();
        let b = k_closure(&v, 2, &lim()).unwrap().to_string();
        assert_eq!(a, b);
        assert_eq!(a, "6: (5 6), (3 4), (1 2)");
    }
}
