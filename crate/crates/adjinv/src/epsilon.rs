//! Orthonormal-coordinate presentations of the B, C, and F root systems,
//! used to print roots the way the classical tables write them.

use num_traits::Zero;

use crate::algebra::{Family, SimpleType};
use crate::error::Result;
use crate::root_system::{Rat, Root, RootSystem};

/// ε-vectors of the simple roots of one factor, rows indexed by local node.
/// B_n: α_i = e_i - e_{i+1}, α_n = e_n. C_n: same start, α_n = 2e_n.
/// F4: α1 = e2 - e3, α2 = e3 - e4, α3 = e4, α4 = (e1 - e2 - e3 - e4)/2.
fn simple_epsilon_rows(ty: SimpleType) -> Option<Vec<Vec<Rat>>> {
    let n = ty.rank();
    let one = Rat::from(1);
    let half = Rat::new(1, 2);
    let mut rows = vec![vec![Rat::zero(); n]; n];
    match ty.family() {
        Family::B => {
            for i in 0..n - 1 {
                rows[i][i] = one;
                rows[i][i + 1] = -one;
            }
            rows[n - 1][n - 1] = one;
        }
        Family::C => {
            for i in 0..n - 1 {
                rows[i][i] = one;
                rows[i][i + 1] = -one;
            }
            rows[n - 1][n - 1] = Rat::from(2);
        }
        Family::F => {
            rows[0][1] = one;
            rows[0][2] = -one;
            rows[1][2] = one;
            rows[1][3] = -one;
            rows[2][3] = one;
            rows[3][0] = half;
            rows[3][1] = -half;
            rows[3][2] = -half;
            rows[3][3] = -half;
        }
        _ => return None,
    }
    Some(rows)
}

impl RootSystem {
    /// ε-coordinates of a root, when its factor is one of the types with a
    /// pinned orthonormal presentation (B, C, F). Other factors give `None`.
    pub fn epsilon_coords(&self, root: &Root) -> Result<Option<Vec<Rat>>> {
        self.check_root(root)?;
        let slice = &self.factors()[root.factor()];
        let rows = match simple_epsilon_rows(slice.ty) {
            Some(rows) => rows,
            None => return Ok(None),
        };
        let local = &root.coords()[slice.indices()];
        let mut out = vec![Rat::zero(); slice.ty.rank()];
        for (k, &c) in local.iter().enumerate() {
            if c != 0 {
                for (j, v) in rows[k].iter().enumerate() {
                    out[j] += Rat::from(c) * v;
                }
            }
        }
        Ok(Some(out))
    }
}

/// Renders ε-coordinates in the style of the classical tables, for example
/// `e1/2 - e2/2 + e3` or `2e3`. All-zero input renders as `0`.
pub fn format_epsilon(coords: &[Rat]) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = *c < Rat::zero();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = if neg { -*c } else { *c };
        if *abs.numer() != 1 {
            out.push_str(&abs.numer().to_string());
        }
        out.push('e');
        out.push_str(&(i + 1).to_string());
        if *abs.denom() != 1 {
            out.push('/');
            out.push_str(&abs.denom().to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
