//! Permutations of a fixed finite domain.
//!
//! Points are stored 0-based internally; cycle notation on the outside is
//! 1-based. Products act left to right: `p.compose(&q)` applies `p` first,
//! so `x^(pq) = (x^p)^q`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree - 1}` stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse(format!(
                    "point {} appears twice in image list",
                    x + 1
                )));
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 1-based images (the external convention).
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let mut zero = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 || x > images.len() {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: images.len(),
                });
            }
            zero.push((x - 1) as u32);
        }
        Self::from_images(zero)
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange {
                        point: x + 1,
                        degree,
                    });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::Parse(format!("point {} repeated", x + 1)));
                }
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked product for internal use where degrees are known to agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Coordinatewise image of a tuple of 0-based points.
    pub fn apply_to_tuple(&self, tuple: &[usize]) -> Result<Vec<usize>> {
        tuple
            .iter()
            .map(|&x| {
                if x < self.degree() {
                    Ok(self.apply(x))
                } else {
                    Err(Error::PointOutOfRange {
                        point: x + 1,
                        degree: self.degree(),
                    })
                }
            })
            .collect()
    }

    /// Commutes with `other` (same degree assumed).
    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| other.images[x as usize] == self.images[other.images[i] as usize])
    }

    /// Cycles of length at least two, each starting at its smallest point,
    /// sorted by that point. 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Extends to a larger domain, shifting points by `offset` and fixing
    /// everything outside `offset..offset + self.degree()`.
    pub fn embed(&self, offset: usize, degree: usize) -> Result<Permutation> {
        if offset + self.degree() > degree {
            return Err(Error::InvalidArgument(format!(
                "cannot embed degree {} at offset {} into degree {}",
                self.degree(),
                offset,
                degree
            )));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }
}

/// Cycle notation, 1-based, fixed points omitted; identity prints as `()`.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&(x + 1).to_string());
        }
        s.push(')');
    }
    s
}

/// Parses 1-based cycle notation such as `(1 2 3 4)(5 6)` on `degree` points.
///
/// Cycles must be disjoint; a point repeated anywhere in the expression is an
/// error. Commas inside a cycle are accepted as separators.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected `(` in `{text}`")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in `{text}`")));
        };
        let inner = &body[..end];
        if inner.contains('(') {
            return Err(Error::Parse(format!("nested `(` in `{text}`")));
        }
        let mut cycle = Vec::new();
        for tok in inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let x: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad point `{tok}` in `{text}`")))?;
            if x == 0 || x > degree {
                return Err(Error::PointOutOfRange { point: x, degree });
            }
            cycle.push(x - 1);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[end + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(degree, &refs)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[deg {}]", format_cycles(self), self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_left_to_right() {
        assert_eq!(
            p("(1 2 3)", 3).compose(&p("(1 2)", 3)).unwrap(),
            p("(2 3)", 3)
        );
        let x = p("(1 2 3 4)(5 6)", 6);
        assert_eq!(x.compose(&Permutation::identity(6)).unwrap(), x);
    }

    #[test]
    fn cube_of_six_cycle() {
        let c = p("(1 2 3 4 5 6)", 6);
        let cube = c.compose(&c).unwrap().compose(&c).unwrap();
        // cycle-power oracle: x -> x + 3 mod 6
        let oracle: Vec<usize> = (0..6).map(|x| (x + 3) % 6 + 1).collect();
        assert_eq!(cube, Permutation::from_images_one_based(&oracle).unwrap());
        assert_eq!(cube, p("(1 4)(2 5)(3 6)", 6));
        assert_eq!(c.pow(3), cube);
    }

    #[test]
    fn degree_mismatch() {
        let e = p("(1 2)", 2).compose(&p("(1 2)", 3)).unwrap_err();
        assert_eq!(e, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert!(Permutation::identity(4).inverse().is_identity());
        assert_eq!(p("(1 2)(3 4)", 4).inverse(), p("(1 2)(3 4)", 4));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1 2)(3 4)", 4).images(), &[1, 0, 3, 2]);
        assert!(p("()", 5).is_identity());
        assert_eq!(p("()", 5).degree(), 5);
        assert_eq!(p("(1 2 3 4)", 6).images(), &[1, 2, 3, 0, 4, 5]);
        assert_eq!(p(" (1,2) (3 4) ", 4), p("(1 2)(3 4)", 4));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cycles("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 x)", 3), Err(Error::Parse(_))));
        assert!(matches!(
            parse_cycles("(1 2)(2 3)", 3),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_cycles("(1 1)", 3), Err(Error::Parse(_))));
        assert_eq!(
            parse_cycles("(1 4)", 3).unwrap_err(),
            Error::PointOutOfRange {
                point: 4,
                degree: 3
            }
        );
        assert!(matches!(
            parse_cycles("(0 1)", 3),
            Err(Error::PointOutOfRange { .. })
        ));
        assert!(parse_cycles("", 3).is_err());
    }

    #[test]
    fn format_sorted_by_smallest_point() {
        assert_eq!(format_cycles(&p("(5 6)(3 1 2)", 6)), "(1 2 3)(5 6)");
        assert_eq!(format_cycles(&Permutation::identity(3)), "()");
    }

    #[test]
    fn tuples() {
        assert_eq!(p("(1 2)", 2).apply_to_tuple(&[0, 0]).unwrap(), vec![1, 1]);
        assert_eq!(p("(1 2 3)", 3).apply_to_tuple(&[2, 0]).unwrap(), vec![0, 1]);
        assert_eq!(
            Permutation::identity(3).apply_to_tuple(&[2, 1, 2]).unwrap(),
            vec![2, 1, 2]
        );
        assert!(p("(1 2)", 2).apply_to_tuple(&[2]).is_err());
    }

    #[test]
    fn embed_shifts_points() {
        let q = p("(1 2 3)", 3).embed(2, 5).unwrap();
        assert_eq!(q, p("(3 4 5)", 5));
        assert!(p("(1 2 3)", 3).embed(3, 5).is_err());
    }
}
