//! Multiplication tables, subgroup lattices and coset actions.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bsgs::GeneratedGroup;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{format_cycles, Permutation};

/// A finite group given by its multiplication table. Element 0 is the
/// identity; `mul(x, y)` is "x then y", matching permutation composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    labels: Vec<String>,
}

impl AbstractGroup {
    /// Validates closure, identity at index 0, inverses and associativity.
    pub fn from_table(
        rows: Vec<Vec<usize>>,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<AbstractGroup> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidArgument("empty multiplication table".into()));
        }
        if labels.len() != m {
            return Err(Error::InvalidArgument(
                "one label per element required".into(),
            ));
        }
        let mut table = Vec::with_capacity(m * m);
        for row in &rows {
            if row.len() != m || row.iter().any(|&x| x >= m) {
                return Err(Error::InvalidArgument(
                    "table is not square over element indices".into(),
                ));
            }
            table.extend(row.iter().map(|&x| x as u32));
        }
        let at = |x: usize, y: usize| table[x * m + y] as usize;
        for x in 0..m {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::InvalidArgument(
                    "element 0 is not the identity".into(),
                ));
            }
        }
        let inverses = (0..m)
            .map(|x| {
                (0..m)
                    .find(|&y| at(x, y) == 0 && at(y, x) == 0)
                    .ok_or_else(|| Error::InvalidArgument(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for x in 0..m {
            for y in 0..m {
                let xy = at(x, y);
                for z in 0..m {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(Error::InvalidArgument("table is not associative".into()));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= m) {
            return Err(Error::InvalidArgument(
                "generator index out of range".into(),
            ));
        }
        let generators = if generators.is_empty() {
            vec![0]
        } else {
            generators
        };
        Ok(AbstractGroup {
            order: m,
            table,
            inverses,
            generators,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != 0 {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverses[g], x), g)
    }

    /// Smallest subgroup containing `seeds`.
    pub fn generated(&self, seeds: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0usize];
        let gens: Vec<usize> = seeds.into_iter().filter(|&s| s != 0).collect();
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
        }
        Subgroup::from_unsorted(elems)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    /// `g^-1 H g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        Subgroup::from_unsorted(h.elements.iter().map(|&x| self.conjugate(x, g)).collect())
    }
}

/// Subgroup as a sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    fn from_unsorted(mut elements: Vec<usize>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    /// Ordering key: by order, then by the sorted element list.
    fn key(&self) -> (usize, &[usize]) {
        (self.elements.len(), &self.elements)
    }
}

/// Multiplication table of a permutation group. Elements are numbered in
/// breadth-first order from the identity over the nontrivial generators;
/// labels are cycle notations.
pub fn cayley_table(g: &GeneratedGroup, limits: &Limits) -> Result<AbstractGroup> {
    let order = g.order();
    if order > limits.max_table_order as u64 {
        return Err(Error::cap(
            "Cayley table order",
            order,
            limits.max_table_order as u64,
        ));
    }
    let gens = g.nontrivial_generators();
    let id = Permutation::identity(g.degree());
    let mut index: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elems = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in &gens {
            let y = elems[i].mul(s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
            }
        }
    }
    debug_assert_eq!(elems.len() as u64, order);
    let m = elems.len();
    let rows: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| index[&elems[i].mul(&elems[j])]).collect())
        .collect();
    let generators: Vec<usize> = gens.iter().map(|s| index[s]).collect();
    let labels = elems.iter().map(format_cycles).collect();
    Ok(AbstractGroup::from_table_unchecked(
        rows, generators, labels,
    ))
}

impl AbstractGroup {
    fn from_table_unchecked(
        rows: Vec<Vec<usize>>,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> AbstractGroup {
        let m = rows.len();
        let table: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
        let mut inverses = vec![0; m];
        for x in 0..m {
            inverses[x] = (0..m)
                .find(|&y| table[x * m + y] == 0)
                .expect("group table");
        }
        let generators = if generators.is_empty() {
            vec![0]
        } else {
            generators
        };
        AbstractGroup {
            order: m,
            table,
            inverses,
            generators,
            labels,
        }
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }
}

/// All subgroups, ordered by order and then by sorted element list.
///
/// Starts from the cyclic subgroups and closes the list under pairwise
/// joins.
pub fn subgroups(a: &AbstractGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if a.order() > limits.max_lattice_order {
        return Err(Error::cap(
            "subgroup lattice order",
            a.order() as u64,
            limits.max_lattice_order as u64,
        ));
    }
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut list: Vec<Subgroup> = Vec::new();
    for x in 0..a.order() {
        let c = a.generated([x]);
        if seen.insert(c.clone()) {
            list.push(c);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            if list[i].contains_all(&list[j]) || list[j].contains_all(&list[i]) {
                continue;
            }
            let join = a.generated(
                list[i]
                    .elements
                    .iter()
                    .chain(list[j].elements.iter())
                    .copied(),
            );
            if seen.insert(join.clone()) {
                list.push(join);
            }
        }
        i += 1;
    }
    list.sort_by(|x, y| x.key().cmp(&y.key()));
    Ok(list)
}

impl Subgroup {
    pub fn contains_all(&self, other: &Subgroup) -> bool {
        other.elements.iter().all(|&x| self.contains(x))
    }
}

/// Intersection of all conjugates of `h`: the kernel of the coset action.
pub fn core(a: &AbstractGroup, h: &Subgroup) -> Subgroup {
    let mut acc = h.clone();
    for g in 0..a.order() {
        if acc.is_trivial() {
            break;
        }
        acc = acc.intersection(&a.conjugate_subgroup(h, g));
    }
    acc
}

/// Action of the table generators on the right cosets `Hx` of `h`, coset
/// `Hx -> Hxg`. Cosets are numbered by their smallest element index.
pub fn coset_action(a: &AbstractGroup, h: &Subgroup) -> GeneratedGroup {
    let m = a.order();
    let mut coset_of = vec![usize::MAX; m];
    let mut reps = Vec::new();
    for x in 0..m {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &y in h.elements() {
            coset_of[a.mul(y, x)] = id;
        }
    }
    let degree = reps.len();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|&g| {
            let images: Vec<u32> = reps.iter().map(|&r| coset_of[a.mul(r, g)] as u32).collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        })
        .collect();
    GeneratedGroup::new(degree, gens).expect("consistent degrees")
}

/// Conjugacy class id for each subgroup in `list`; ids are assigned in
/// list order, so the first member of each class is its representative.
pub fn subgroup_classes(a: &AbstractGroup, list: &[Subgroup]) -> Vec<usize> {
    let pos: HashMap<&Subgroup, usize> = list.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut class = vec![usize::MAX; list.len()];
    let mut next = 0;
    for i in 0..list.len() {
        if class[i] != usize::MAX {
            continue;
        }
        for g in 0..a.order() {
            let c = a.conjugate_subgroup(&list[i], g);
            class[pos[&c]] = next;
        }
        next += 1;
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bsgs::regular_representation;

    fn table(spec: &str) -> AbstractGroup {
        cayley_table(&GeneratedGroup::parse(spec).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn small_tables() {
        let z2 = table("2: (1 2)");
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.mul(1, 1), 0);
        let v4 = table("4: (1 2), (3 4)");
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!((1..4).all(|x| v4.element_order(x) == 2));
        let d8 = table("4: (1 2 3 4), (1 3)");
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert_eq!(d8.label(0), "()");
        assert!(AbstractGroup::from_table(
            d8.rows(),
            d8.generators().to_vec(),
            (0..8).map(|i| i.to_string()).collect()
        )
        .is_ok());
    }

    #[test]
    fn bfs_numbering_of_klein_four() {
        let v4 = table("4: (1 2), (3 4)");
        assert_eq!(v4.generators(), &[1, 2]);
        assert_eq!(v4.mul(1, 2), 3);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(AbstractGroup::from_table(
            vec![vec![0, 1], vec![1, 1]],
            vec![],
            vec!["e".into(), "a".into()]
        )
        .is_err());
        assert!(AbstractGroup::from_table(
            vec![vec![1, 0], vec![0, 1]],
            vec![],
            vec!["e".into(), "a".into()]
        )
        .is_err());
        assert!(AbstractGroup::from_table(vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn table_cap() {
        let s6 = GeneratedGroup::symmetric(6);
        assert!(matches!(
            cayley_table(&s6, &Limits::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subgroup_counts() {
        let lim = Limits::default();
        assert_eq!(subgroups(&table("4: (1 2), (3 4)"), &lim).unwrap().len(), 5);
        assert_eq!(subgroups(&table("4: (1 2 3 4)"), &lim).unwrap().len(), 3);
        let q8 = table("8: (1 2 4 7)(3 6 8 5), (1 3 4 8)(2 5 7 6)");
        let subs = subgroups(&q8, &lim).unwrap();
        assert_eq!(subs.len(), 6);
        // every subgroup of Q8 is normal
        assert!(subs.iter().all(|h| core(&q8, h) == *h));
        assert_eq!(
            subgroups(&table("4: (1 2 3 4), (1 3)"), &lim)
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            subgroups(&table("3: (1 2 3), (1 2)"), &lim).unwrap().len(),
            6
        );
    }

    #[test]
    fn subgroup_order_is_deterministic() {
        let subs = subgroups(&table("4: (1 2), (3 4)"), &Limits::default()).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4]);
        assert_eq!(subs[1].elements(), &[0, 1]);
        assert_eq!(subs[2].elements(), &[0, 2]);
        assert_eq!(subs[3].elements(), &[0, 3]);
    }

    #[test]
    fn cores() {
        let s3 = table("3: (1 2 3), (1 2)");
        let subs = subgroups(&s3, &Limits::default()).unwrap();
        for h in &subs {
            let c = core(&s3, h);
            match h.order() {
                2 => assert!(c.is_trivial()),
                _ => assert_eq!(c, *h),
            }
        }
        let v4 = table("4: (1 2), (3 4)");
        assert_eq!(core(&v4, &v4.whole()), v4.whole());
    }

    #[test]
    fn coset_actions() {
        let v4 = table("4: (1 2), (3 4)");
        let triv = coset_action(&v4, &v4.trivial_subgroup());
        assert!(triv.same_group(&regular_representation(&v4)));
        assert!(triv.is_regular());
        let whole = coset_action(&v4, &v4.whole());
        assert_eq!(whole.degree(), 1);
        assert!(whole.is_trivial());

        let subs = subgroups(&v4, &Limits::default()).unwrap();
        let parts: Vec<GeneratedGroup> = subs[1..4].iter().map(|h| coset_action(&v4, h)).collect();
        let u = crate::bsgs::disjoint_union_action(&parts).unwrap();
        assert_eq!(u.to_string(), "6: (3 4)(5 6), (1 2)(5 6)");
    }

    #[test]
    fn coset_action_kernel_is_core() {
        let s3 = table("3: (1 2 3), (1 2)");
        for h in subgroups(&s3, &Limits::default()).unwrap() {
            let act = coset_action(&s3, &h);
            assert_eq!(act.degree() * h.order(), 6);
            assert_eq!(act.order() as usize * core(&s3, &h).order(), 6);
        }
    }

    #[test]
    fn conjugacy_classes_of_d8() {
        let d8 = table("4: (1 2 3 4), (1 3)");
        let subs = subgroups(&d8, &Limits::default()).unwrap();
        let classes = subgroup_classes(&d8, &subs);
        let n = classes.iter().max().unwrap() + 1;
        assert_eq!(n, 8);
    }
}
