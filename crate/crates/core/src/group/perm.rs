use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}`, stored as its image array.
///
/// Products follow function composition: `a.compose(&b)` applies `b`
/// first and then `a`. Ordering is lexicographic on the image arrays,
/// which makes the identity the smallest permutation of its degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidPerm(format!(
                        "point {} outside degree {degree}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidPerm(format!(
                        "point {} repeated in cycle notation",
                        p + 1
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm { images })
    }

    /// Parses disjoint-cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`.
    ///
    /// Points may be separated by spaces or commas. A cycle written without
    /// separators such as `(123)` is read digit by digit when the degree is
    /// below 10. `()` and `e` denote the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Perm> {
        let text = text.trim();
        if text == "e" || text == "()" || text.is_empty() {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::InvalidPerm(format!("expected '(' in {text:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::InvalidPerm(format!("stray text in {text:?}")));
            }
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| Error::InvalidPerm(format!("unbalanced '(' in {text:?}")))?
                + open;
            let body = &rest[open + 1..close];
            let tokens: Vec<&str> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect();
            let tokens: Vec<String> = if tokens.len() == 1 && degree < 10 && tokens[0].len() > 1 {
                tokens[0].chars().map(|c| c.to_string()).collect()
            } else {
                tokens.iter().map(|t| t.to_string()).collect()
            };
            let mut cycle = Vec::with_capacity(tokens.len());
            for t in tokens {
                let p: usize = t
                    .parse()
                    .map_err(|_| Error::InvalidPerm(format!("bad point {t:?}")))?;
                if p == 0 {
                    return Err(Error::InvalidPerm("points are 1-based".into()));
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Non-trivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse("(123)", 3).unwrap(), Perm::parse("(1,2,3)", 3).unwrap());
        assert!(Perm::parse("(1 1)", 3).is_err());
        assert!(Perm::parse("(1 7)", 3).is_err());
        assert!(Perm::parse("(0 1)", 3).is_err());
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::parse("(1 2)", 3).unwrap();
        let b = Perm::parse("(2 3)", 3).unwrap();
        // 1 -b-> 1 -a-> 2
        assert_eq!(a.compose(&b).apply(0), 1);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![2, 0, 1]).is_ok());
    }
}
