//! Classification data for semisimple algebras: the nine simple families in
//! Bourbaki numbering, rank validation, Cartan matrices, and the name
//! grammar `A2xB3` for products.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The families of simple root systems.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// One simple factor, e.g. `B3`.
///
/// Rank restrictions rule out the duplicate low-rank presentations: `B1`,
/// `C1`, `C2`, `D2`, `D3` are rejected in favour of their canonical names.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidSpec(format!(
                "{}{rank} is not a valid simple type",
                family.letter()
            )))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn dimension(&self) -> usize {
        self.rank + 2 * self.positive_root_count()
    }

    /// Cartan matrix with `c[i][j] = ⟨α_i, α_j^∨⟩`, so row `i` holds the
    /// Dynkin labels of the simple root `α_i`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    edge(&mut c, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
                c[n - 2][n - 1] = -2;
            }
            Family::C => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
                c[n - 1][n - 2] = -2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    edge(&mut c, i, i + 1);
                }
                edge(&mut c, n - 3, n - 1);
            }
            Family::E => {
                for &(i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)].iter() {
                    edge(&mut c, i, j);
                }
                if n >= 7 {
                    edge(&mut c, 5, 6);
                }
                if n == 8 {
                    edge(&mut c, 6, 7);
                }
            }
            Family::F => {
                for i in 0..3 {
                    edge(&mut c, i, i + 1);
                }
                c[1][2] = -2;
            }
            Family::G => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
        }
        c
    }

    /// `6·(α_j, α_j)` for each simple root, with long roots normalized to
    /// squared length 2 (so long = 12, short = 6 in B/C/F and 4 in G2).
    pub(crate) fn simple_norms6(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![12; n],
            Family::B => {
                let mut v = vec![12; n];
                v[n - 1] = 6;
                v
            }
            Family::C => {
                let mut v = vec![6; n];
                v[n - 1] = 12;
                v
            }
            Family::F => vec![12, 12, 6, 6],
            Family::G => vec![4, 12],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A semisimple algebra: a nonempty product of simple factors.
///
/// The text form joins factors with `x`, case-insensitively: `"B3xG2"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AlgebraSpec {
    factors: Vec<SimpleType>,
}

impl AlgebraSpec {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("empty factor list".into()));
        }
        Ok(AlgebraSpec { factors })
    }

    pub fn simple(ty: SimpleType) -> Self {
        AlgebraSpec { factors: vec![ty] }
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|t| t.dimension()).sum()
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for token in s.split(['x', 'X']) {
            let token = token.trim();
            let mut chars = token.chars();
            let letter = chars
                .next()
                .ok_or_else(|| Error::InvalidSpec(format!("empty factor in {s:?}")))?;
            let family = match letter.to_ascii_uppercase() {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                _ => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown family {letter:?} in {s:?}"
                    )))
                }
            };
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad rank in factor {token:?}")))?;
            factors.push(SimpleType::new(family, rank)?);
        }
        AlgebraSpec::new(factors)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_and_product_specs() {
        let spec: AlgebraSpec = "B3xG2".parse().unwrap();
        assert_eq!(spec.factors().len(), 2);
        assert_eq!(spec.rank(), 5);
        assert_eq!(spec.dimension(), 35);
        assert_eq!(spec.to_string(), "B3xG2");

        let lower: AlgebraSpec = "a2xb2".parse().unwrap();
        assert_eq!(lower.to_string(), "A2xB2");
        assert_eq!(lower.rank(), 4);
    }

    #[test]
    fn rejects_duplicate_low_rank_presentations() {
        for bad in ["B1", "C1", "C2", "D2", "D3", "E5", "E9", "F3", "G4", "A0", "H3", "B"] {
            assert!(bad.parse::<AlgebraSpec>().is_err(), "{bad} should be rejected");
        }
        for good in ["A1", "B2", "C3", "D4", "E6", "E7", "E8", "F4", "G2"] {
            assert!(good.parse::<AlgebraSpec>().is_ok(), "{good} should parse");
        }
    }

    #[test]
    fn cartan_matrices_match_bourbaki_tables() {
        let g2 = SimpleType::new(Family::G, 2).unwrap();
        assert_eq!(g2.cartan(), vec![vec![2, -1], vec![-3, 2]]);

        let b3 = SimpleType::new(Family::B, 3).unwrap();
        assert_eq!(
            b3.cartan(),
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );

        let c3 = SimpleType::new(Family::C, 3).unwrap();
        assert_eq!(
            c3.cartan(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );

        let f4 = SimpleType::new(Family::F, 4).unwrap();
        assert_eq!(
            f4.cartan(),
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );

        let a1 = SimpleType::new(Family::A, 1).unwrap();
        assert_eq!(a1.cartan(), vec![vec![2]]);
    }

    #[test]
    fn root_counts_and_dimensions() {
        let cases = [
            ("A2", 3, 8),
            ("B2", 4, 10),
            ("B3", 9, 21),
            ("C3", 9, 21),
            ("D4", 12, 28),
            ("E6", 36, 78),
            ("E7", 63, 133),
            ("E8", 120, 248),
            ("F4", 24, 52),
            ("G2", 6, 14),
        ];
        for (name, pos, dim) in cases {
            let ty = name.parse::<AlgebraSpec>().unwrap().factors()[0];
            assert_eq!(ty.positive_root_count(), pos, "{name}");
            assert_eq!(ty.dimension(), dim, "{name}");
        }
    }

    #[test]
    fn cartan_rows_are_consistent_with_root_lengths() {
        // c[i][j]·(α_j,α_j) = c[j][i]·(α_i,α_i) since both equal 2(α_i,α_j).
        for name in ["A3", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let ty = name.parse::<AlgebraSpec>().unwrap().factors()[0];
            let c = ty.cartan();
            let norms = ty.simple_norms6();
            for i in 0..ty.rank() {
                for j in 0..ty.rank() {
                    assert_eq!(c[i][j] * norms[j], c[j][i] * norms[i], "{name} ({i},{j})");
                }
            }
        }
    }
}
