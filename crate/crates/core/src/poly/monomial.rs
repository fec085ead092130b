use std::cmp::Ordering;
use std::fmt;

/// Monomial x^i y^j z^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial([i, j, k])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if (0..3).all(|v| self.0[v] >= other.0[v]) {
            Some(Monomial([
                self.0[0] - other.0[0],
                self.0[1] - other.0[1],
                self.0[2] - other.0[2],
            ]))
        } else {
            None
        }
    }

    /// Position in the graded-lex basis of its degree.
    pub fn index(&self) -> usize {
        let a = (self.0[1] + self.0[2]) as usize;
        a * (a + 1) / 2 + self.0[2] as usize
    }

    /// Inverse of [`Monomial::index`].
    pub fn from_index(degree: u32, idx: usize) -> Monomial {
        let mut a = 0usize;
        while (a + 1) * (a + 2) / 2 <= idx {
            a += 1;
        }
        let k = idx - a * (a + 1) / 2;
        let j = a - k;
        Monomial([degree - a as u32, j as u32, k as u32])
    }
}

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

/// `C(n + 2, 2)` extended by zero to negative `n`.
pub fn count_or_zero(n: i64) -> u64 {
    if n < 0 {
        0
    } else {
        ((n + 1) * (n + 2) / 2) as u64
    }
}

/// All monomials of degree `d` in graded-lex order (x > y > z).
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for a in 0..=d {
        for k in 0..=a {
            out.push(Monomial([d - a, a - k, k]));
        }
    }
    out
}

impl Ord for Monomial {
    /// Lower degree first; within a degree, graded-lex order with x > y > z
    /// listed from the largest monomial down, so that x^d comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.0[0].cmp(&self.0[0]))
            .then(other.0[1].cmp(&self.0[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, &e) in ["x", "y", "z"].iter().zip(&self.0) {
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_order() {
        let names: Vec<String> = monomials(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
    }

    #[test]
    fn index_roundtrip() {
        for d in 0..12 {
            for (i, m) in monomials(d).iter().enumerate() {
                assert_eq!(m.index(), i);
                assert_eq!(Monomial::from_index(d, i), *m);
            }
        }
        assert_eq!(monomial_count(8), 45);
    }

    #[test]
    fn ord_follows_index() {
        let ms = monomials(5);
        for w in ms.windows(2) {
            assert!(w[0] < w[1]);
        }
    }
}
