//! Intertwiner spaces `Hom_A(src, dst)`.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::module::ModuleRep;

/// Basis of `{T : T·A_i = B_i·T for all i}` where `A_i` act on `src` and `B_i` on `dst`.
/// Each `T` is `dst.dim() × src.dim()`.
pub fn hom_space(src: &ModuleRep, dst: &ModuleRep) -> Result<Vec<Mat>> {
    if src.field() != dst.field() {
        return Err(Error::FieldMismatch);
    }
    if src.num_gens() != dst.num_gens() {
        return Err(Error::Shape(format!("generator count mismatch: {} vs {}", src.num_gens(), dst.num_gens())));
    }
    let f = src.field();
    let (n, m) = (src.dim(), dst.dim());
    let unknowns = m * n;
    // unknown T[r][k] sits at r * n + k
    let mut system = Mat::zeros(f, src.num_gens() * unknowns, unknowns);
    for (g, (a, b)) in src.gens().iter().zip(dst.gens()).enumerate() {
        for r in 0..m {
            for c in 0..n {
                let eq = g * unknowns + r * n + c;
                // (T A)[r][c] = Σ_k T[r][k] A[k][c]
                for k in 0..n {
                    let x = a.get(k, c);
                    if x != 0 {
                        let idx = r * n + k;
                        system.set(eq, idx, f.add(system.get(eq, idx), x));
                    }
                }
                // (B T)[r][c] = Σ_k B[r][k] T[k][c]
                for k in 0..m {
                    let x = b.get(r, k);
                    if x != 0 {
                        let idx = k * n + c;
                        system.set(eq, idx, f.sub(system.get(eq, idx), x));
                    }
                }
            }
        }
    }
    let kernel = system.kernel_basis();
    Ok(kernel
        .rows()
        .iter()
        .map(|v| Mat::from_flat(f, m, n, v.clone()).expect("kernel vector has m*n entries"))
        .collect())
}

/// Whether `t` intertwines the two actions.
pub fn intertwines(t: &Mat, src: &ModuleRep, dst: &ModuleRep) -> bool {
    t.rows() == dst.dim()
        && t.cols() == src.dim()
        && src.num_gens() == dst.num_gens()
        && src.gens().iter().zip(dst.gens()).all(|(a, b)| t.mul(a) == b.mul(t))
}
