//! Generated permutation groups and their stabilizer chains.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{parse_cycles, Permutation};
use crate::totality::AbstractGroup;

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    orbit: Vec<usize>,
    /// `transversal[b]` maps `point` to `b` for every `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn compute(degree: usize, point: usize, gens: &[&Permutation]) -> Level {
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[point] = Some(Permutation::identity(degree));
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in gens {
                let y = g.apply(x);
                if transversal[y].is_none() {
                    let u = transversal[x].as_ref().unwrap().mul(g);
                    transversal[y] = Some(u);
                    orbit.push(y);
                }
            }
        }
        Level {
            point,
            orbit,
            transversal,
        }
    }

    #[inline]
    fn rep(&self, b: usize) -> Option<&Permutation> {
        self.transversal[b].as_ref()
    }
}

/// Base, basic orbits with transversals, and a strong generating set.
///
/// Built by deterministic Schreier-Sims over a base that lists every point
/// (a caller-supplied prefix, then the remaining points in increasing
/// order); levels with a trivial basic orbit are dropped afterwards. Without
/// a prefix the base is therefore the greedy sequence "smallest point moved
/// by the current stabilizer".
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    strong_generators: Vec<Permutation>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> StabilizerChain {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Chain whose base starts with `prefix` (repeats are ignored).
    pub fn with_base_prefix(
        degree: usize,
        generators: &[Permutation],
        prefix: &[usize],
    ) -> StabilizerChain {
        let mut base: Vec<usize> = Vec::with_capacity(degree);
        let mut in_base = vec![false; degree];
        for b in prefix.iter().copied().chain(0..degree) {
            if !in_base[b] {
                in_base[b] = true;
                base.push(b);
            }
        }
        let m = base.len();

        let mut strong: Vec<Permutation> = Vec::new();
        let mut seen = HashSet::new();
        for g in generators {
            if !g.is_identity() && seen.insert(g.clone()) {
                strong.push(g.clone());
            }
        }

        let level_gens = |strong: &[Permutation], i: usize| -> Vec<usize> {
            strong
                .iter()
                .enumerate()
                .filter(|(_, s)| base[..i].iter().all(|&b| s.apply(b) == b))
                .map(|(j, _)| j)
                .collect()
        };
        let compute = |strong: &[Permutation], i: usize| -> (Vec<usize>, Level) {
            let idx = level_gens(strong, i);
            let refs: Vec<&Permutation> = idx.iter().map(|&j| &strong[j]).collect();
            (idx, Level::compute(degree, base[i], &refs))
        };

        let mut gens_at: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut levels: Vec<Level> = Vec::with_capacity(m);
        for i in 0..m {
            let (idx, lvl) = compute(&strong, i);
            gens_at.push(idx);
            levels.push(lvl);
        }

        let strip = |levels: &[Level], mut g: Permutation, start: usize| -> (Permutation, usize) {
            for (l, lvl) in levels.iter().enumerate().skip(start) {
                let b = g.apply(lvl.point);
                match lvl.rep(b) {
                    Some(u) => g = g.mul(&u.inverse()),
                    None => return (g, l),
                }
            }
            (g, levels.len())
        };

        let mut i = m as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit = levels[li].orbit.clone();
            for &b in &orbit {
                for &sj in &gens_at[li] {
                    let s = &strong[sj];
                    let ub = levels[li].rep(b).unwrap();
                    let ubs = levels[li].rep(s.apply(b)).unwrap();
                    let schreier = ub.mul(s).mul(&ubs.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = strip(&levels, schreier, li + 1);
                    if !h.is_identity() {
                        debug_assert!(j < m);
                        strong.push(h);
                        for l in li + 1..=j {
                            let (idx, lvl) = compute(&strong, l);
                            gens_at[l] = idx;
                            levels[l] = lvl;
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }

        levels.retain(|l| l.orbit.len() > 1);
        StabilizerChain {
            degree,
            levels,
            strong_generators: strong,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points (0-based).
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    /// Strong generators fixing the first `level` base points; they generate
    /// that stabilizer.
    pub fn stabilizer_generators(&self, level: usize) -> Vec<Permutation> {
        let prefix: Vec<usize> = self.levels[..level.min(self.levels.len())]
            .iter()
            .map(|l| l.point)
            .collect();
        self.strong_generators
            .iter()
            .filter(|s| prefix.iter().all(|&b| s.apply(b) == b))
            .cloned()
            .collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Residue after sifting, and the number of levels passed.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut g = g.clone();
        for (l, lvl) in self.levels.iter().enumerate() {
            match lvl.rep(g.apply(lvl.point)) {
                Some(u) => g = g.mul(&u.inverse()),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, l) = self.sift(g);
        l == self.levels.len() && h.is_identity()
    }

    pub fn elements(&self, limits: &Limits) -> Result<Elements<'_>> {
        let order = self.order();
        if order > limits.max_elements as u128 {
            return Err(Error::cap(
                "element enumeration",
                order,
                limits.max_elements,
            ));
        }
        Ok(Elements {
            chain: self,
            counters: vec![0; self.levels.len()],
            done: false,
        })
    }
}

/// Deterministic enumeration of a chain's elements: every element is
/// `u_d ... u_1` with `u_i` from the i-th transversal; the first level's
/// index varies slowest.
pub struct Elements<'a> {
    chain: &'a StabilizerChain,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let levels = &self.chain.levels;
        let mut g = Permutation::identity(self.chain.degree);
        for (l, lvl) in levels.iter().enumerate().rev() {
            g = g.mul(lvl.rep(lvl.orbit[self.counters[l]]).unwrap());
        }
        // odometer, last level fastest
        let mut l = levels.len();
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.counters[l] += 1;
            if self.counters[l] < levels[l].orbit.len() {
                break;
            }
            self.counters[l] = 0;
        }
        Some(g)
    }
}

/// A permutation group given by generators, with a lazily built chain.
#[derive(Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl GeneratedGroup {
    /// An empty generator list means the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<GeneratedGroup> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(GeneratedGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> GeneratedGroup {
        Self::new(degree, vec![]).expect("positive degree")
    }

    /// `Sym(degree)` generated by a transposition and an n-cycle.
    pub fn symmetric(degree: usize) -> GeneratedGroup {
        if degree < 2 {
            return Self::trivial(degree.max(1));
        }
        let t = Permutation::from_cycles(degree, &[&[0, 1]]).unwrap();
        let all: Vec<usize> = (0..degree).collect();
        let c = Permutation::from_cycles(degree, &[&all]).unwrap();
        Self::new(degree, vec![t, c]).unwrap()
    }

    /// `Sym(points)` acting on a subset of a larger domain.
    pub fn symmetric_on(degree: usize, points: &[usize]) -> GeneratedGroup {
        let mut gens = Vec::new();
        if points.len() >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&points[..2]]).unwrap());
            if points.len() > 2 {
                gens.push(Permutation::from_cycles(degree, &[points]).unwrap());
            }
        }
        Self::new(degree, gens).unwrap()
    }

    /// Parses `"degree: gen1, gen2, ..."`, e.g. `"6: (3 4)(5 6), (1 2)(5 6)"`.
    pub fn parse(spec: &str) -> Result<GeneratedGroup> {
        let (deg, gens) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `degree: generators`, got `{spec}`")))?;
        let degree: usize = deg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree `{}`", deg.trim())))?;
        if degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut generators = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        let mut pieces = Vec::new();
        for (i, c) in gens.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    pieces.push(&gens[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&gens[start..]);
        let only_blank = pieces.iter().all(|p| p.trim().is_empty());
        if !only_blank {
            for piece in pieces {
                generators.push(parse_cycles(piece, degree)?);
            }
        }
        Self::new(degree, generators)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u64 {
        self.chain().order() as u64
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn elements(&self, limits: &Limits) -> Result<Elements<'_>> {
        self.chain().elements(limits)
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &GeneratedGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &GeneratedGroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// Orbit partition, each orbit sorted, orbits ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut label = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[start] = id;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = id;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Full pointwise stabilizer of `points`, generated by the strong
    /// generators of a chain whose base starts with those points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<GeneratedGroup> {
        for &p in points {
            if p >= self.degree {
                return Err(Error::PointOutOfRange {
                    point: p + 1,
                    degree: self.degree,
                });
            }
        }
        let chain = StabilizerChain::with_base_prefix(self.degree, &self.generators, points);
        let gens: Vec<Permutation> = chain
            .strong_generators()
            .iter()
            .filter(|s| points.iter().all(|&b| s.apply(b) == b))
            .cloned()
            .collect();
        GeneratedGroup::new(self.degree, gens)
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<GeneratedGroup> {
        self.pointwise_stabilizer(&[point])
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree as u64
    }

    /// Generators with identities and duplicates removed.
    pub fn nontrivial_generators(&self) -> Vec<Permutation> {
        let mut seen = HashSet::new();
        self.generators
            .iter()
            .filter(|g| !g.is_identity() && seen.insert((*g).clone()))
            .cloned()
            .collect()
    }

    /// The group cut down to a generating set of elements, each of which
    /// enlarges the group generated by the previous ones.
    pub fn reduced(&self) -> GeneratedGroup {
        reduce_generators(self.degree, self.generators.iter().cloned())
    }
}

/// Keeps each candidate that is not already in the group generated by the
/// previously kept ones, in the given order.
pub fn reduce_generators(
    degree: usize,
    candidates: impl IntoIterator<Item = Permutation>,
) -> GeneratedGroup {
    let mut kept: Vec<Permutation> = Vec::new();
    let mut chain = StabilizerChain::new(degree, &kept);
    for c in candidates {
        if c.is_identity() || chain.contains(&c) {
            continue;
        }
        kept.push(c);
        chain = StabilizerChain::new(degree, &kept);
    }
    let group = GeneratedGroup::new(degree, kept).expect("consistent degrees");
    let _ = group.chain.set(chain);
    group
}

impl fmt::Display for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratedGroup({self})")
    }
}

/// Right regular action of an abstract group on its own elements: element
/// `x` sends point `y` to `y * x`. Points are element indices.
pub fn regular_representation(a: &AbstractGroup) -> GeneratedGroup {
    let m = a.order();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|&x| {
            let images: Vec<u32> = (0..m).map(|y| a.mul(y, x) as u32).collect();
            Permutation::from_images(images).expect("table rows are bijections")
        })
        .collect();
    GeneratedGroup::new(m, gens).expect("consistent degrees")
}

/// Direct product acting on the disjoint union of the parts' domains, in
/// order; each part's generators are extended by fixed points elsewhere.
pub fn disjoint_union_product(parts: &[GeneratedGroup]) -> Result<GeneratedGroup> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("disjoint union of no groups".into()));
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let degree: usize = parts.iter().map(|p| p.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for part in parts {
        for g in part.nontrivial_generators() {
            gens.push(g.embed(offset, degree)?);
        }
        offset += part.degree();
    }
    GeneratedGroup::new(degree, gens)
}

/// One action on the disjoint union of the parts' domains: generator `j`
/// acts as generator `j` of every part at once. All parts must list the
/// same number of generators, in corresponding order.
pub fn disjoint_union_action(parts: &[GeneratedGroup]) -> Result<GeneratedGroup> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidArgument(
            "disjoint union of no actions".into(),
        ));
    };
    let count = first.generators().len();
    if parts.iter().any(|p| p.generators().len() != count) {
        return Err(Error::InvalidArgument(
            "actions list different numbers of generators".into(),
        ));
    }
    let degree: usize = parts.iter().map(|p| p.degree()).sum();
    let gens = (0..count)
        .map(|j| {
            let mut images = Vec::with_capacity(degree);
            let mut offset = 0u32;
            for part in parts {
                images.extend(part.generators()[j].images().iter().map(|&x| x + offset));
                offset += part.degree() as u32;
            }
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratedGroup::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn g(spec: &str) -> GeneratedGroup {
        GeneratedGroup::parse(spec).unwrap()
    }

    /// Exhaustive closure under multiplication, independent of the chain.
    fn closure_size(group: &GeneratedGroup) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(group.degree());
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in group.generators() {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_match_exhaustive_closure() {
        for (spec, order) in [
            ("4: (1 2), (3 4)", 4),
            ("4: (1 2 3 4), (1 3)", 8),
            ("6: (1 2 3 4), (1 3), (5 6)", 16),
            ("7: (1 2), (1 2 3 4 5 6 7)", 5040),
            ("8: (1 2 4 7)(3 6 8 5), (1 3 4 8)(2 5 7 6)", 8),
            ("5: ()", 1),
        ] {
            let grp = g(spec);
            assert_eq!(grp.order(), order, "{spec}");
            if order <= 5040 {
                assert_eq!(closure_size(&grp), order as usize, "{spec}");
            }
        }
    }

    #[test]
    fn greedy_base_ascending() {
        let grp = g("6: (1 2 3 4), (1 3), (5 6)");
        assert_eq!(grp.chain().base(), vec![0, 1, 4]);
        assert!(g("3: ()").chain().base().is_empty());
    }

    #[test]
    fn membership() {
        let c3 = g("3: (1 2 3)");
        assert!(c3.contains(&parse_cycles("(1 3 2)", 3).unwrap()));
        assert!(!c3.contains(&parse_cycles("(1 2)", 3).unwrap()));
        assert!(!c3.contains(&parse_cycles("(1 2)", 4).unwrap()));
    }

    #[test]
    fn elements_are_distinct_and_counted() {
        let limits = Limits::default();
        let grp = g("6: (1 2 3 4 5 6)");
        assert_eq!(grp.elements(&limits).unwrap().count(), 6);
        let d8z2 = g("6: (1 2 3 4), (1 3), (5 6)");
        let els: Vec<_> = d8z2.elements(&limits).unwrap().collect();
        let set: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 16);
        assert!(els.iter().all(|e| d8z2.contains(e)));
        let small = Limits {
            max_elements: 10,
            ..Limits::default()
        };
        assert!(matches!(
            d8z2.elements(&small),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn orbit_partitions() {
        assert_eq!(g("4: (1 2), (3 4)").orbits(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(g("3: ()").orbits(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(
            g("6: (1 2 3 4 5 6)").orbits(),
            vec![(0..6).collect::<Vec<_>>()]
        );
    }

    #[test]
    fn stabilizers() {
        let d8 = g("4: (1 2 3 4), (1 3)");
        let st = d8.point_stabilizer(0).unwrap();
        assert_eq!(st.order(), 2);
        assert!(st.same_group(&g("4: (2 4)")));
        // filter oracle
        let fixing: Vec<_> = d8
            .elements(&Limits::default())
            .unwrap()
            .filter(|e| e.apply(0) == 0)
            .collect();
        assert_eq!(fixing.len(), 2);
        assert!(fixing.iter().all(|e| st.contains(e)));

        let reg = g("4: (1 2 3 4)");
        for a in 0..4 {
            assert_eq!(reg.point_stabilizer(a).unwrap().order(), 1);
        }
        let v = g("5: (1 2), (3 4)");
        assert!(v.point_stabilizer(4).unwrap().same_group(&v));
        assert!(matches!(
            v.point_stabilizer(5),
            Err(Error::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn predicates() {
        assert!(g("4: (1 2 3 4)").is_regular());
        assert!(!g("4: (1 2 3 4), (1 3)").is_abelian());
        assert!(!g("4: (1 2), (3 4)").is_transitive());
        assert!(!g("4: (1 2 3 4), (1 3)").is_regular());
    }

    #[test]
    fn disjoint_unions() {
        let u = disjoint_union_product(&[g("2: (1 2)"), g("3: (1 2 3)")]).unwrap();
        assert_eq!(u.degree(), 5);
        assert_eq!(u.order(), 6);
        assert!(u.same_group(&g("5: (1 2), (3 4 5)")));
        let single = g("3: (1 2 3)");
        assert!(disjoint_union_product(std::slice::from_ref(&single))
            .unwrap()
            .same_group(&single));
        let z2 = g("2: (1 2)");
        let u3 = disjoint_union_product(&[z2.clone(), z2.clone(), z2]).unwrap();
        assert_eq!(u3.order(), 8);
        assert!(u3.same_group(&g("6: (1 2), (3 4), (5 6)")));
        assert!(disjoint_union_product(&[]).is_err());
    }

    #[test]
    fn diagonal_unions() {
        let a = g("2: (1 2)");
        let u = disjoint_union_action(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(u.to_string(), "4: (1 2)(3 4)");
        assert_eq!(u.order(), 2);
        assert!(disjoint_union_action(&[a, g("3: (1 2), (2 3)")]).is_err());
    }

    #[test]
    fn parse_group_specs() {
        let grp = g("6: (3 4)(5 6), (1 2)(5 6)");
        assert_eq!(grp.generators().len(), 2);
        assert_eq!(grp.to_string(), "6: (3 4)(5 6), (1 2)(5 6)");
        assert!(g("3:").is_trivial());
        assert!(GeneratedGroup::parse("bad").is_err());
        assert!(GeneratedGroup::parse("x: (1 2)").is_err());
        assert!(GeneratedGroup::parse("0: ()").is_err());
        assert!(GeneratedGroup::parse("2: (1 3)").is_err());
        assert!(GeneratedGroup::parse("3: (1 2),").is_err());
    }

    #[test]
    fn symmetric_groups() {
        assert_eq!(GeneratedGroup::symmetric(5).order(), 120);
        assert_eq!(GeneratedGroup::symmetric(1).order(), 1);
        assert_eq!(GeneratedGroup::symmetric_on(6, &[1, 3, 5]).order(), 6);
    }

    #[test]
    fn reduction_keeps_group() {
        let grp = g("6: (1 2), (3 4), (1 2)(3 4), (5 6), ()");
        let r = grp.reduced();
        assert_eq!(r.generators().len(), 3);
        assert!(r.same_group(&grp));
    }
}
