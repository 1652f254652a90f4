//! Independent Ext computation from an explicit projective presentation.
//!
//! For `M`, take `P0 = (+)_v P_v (x) Hom(P_v, M)` with the evaluation map onto
//! `M`, compute `K = ker(P0 -> M)` as an honest representation, and read off
//!
//! ```text
//! 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(K,N) -> Ext^1(M,N) -> 0
//! ```
//!
//! so `Ext^1(M,N) = dim Hom(K,N) - rank(restriction along K -> P0)`. Nothing
//! here uses syzygy formulas or the Euler form.

use crate::linalg::{self, Mat};
use crate::modcat::ModCat;
use crate::module::{IndecId, Representation};

/// Result of the presentation computation for one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PresentationDims {
    pub hom: usize,
    pub ext1: usize,
}

/// Projective presentation data for one module.
pub struct Presentation {
    p0: Representation,
    kernel: Representation,
    /// Per vertex, the inclusion `K_v -> P0_v` as a matrix.
    inclusion: Vec<Mat>,
}

fn block_diag_rep(parts: &[&Representation], arrows: &[(usize, usize)]) -> Representation {
    let n = parts.first().map_or(0, |r| r.dims.len());
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|r| r.dims[v]).sum()).collect();
    let maps = arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let mut m = Mat::zeros(dims[t], dims[s]);
            let (mut ro, mut co) = (0, 0);
            for r in parts {
                let a = &r.maps[k];
                for i in 0..a.rows {
                    for j in 0..a.cols {
                        m.set(ro + i, co + j, a.get(i, j));
                    }
                }
                ro += a.rows;
                co += a.cols;
            }
            m
        })
        .collect();
    Representation { dims, maps }
}

impl Presentation {
    pub fn new(cat: &ModCat, m: IndecId, p: u64) -> Self {
        let arrows = cat.arrows();
        let target = &cat.indec(m).rep;
        let n = cat.num_vertices();

        // Every map from every indecomposable projective: surjective by construction.
        let mut summands: Vec<&Representation> = Vec::new();
        let mut maps_out: Vec<Vec<Mat>> = Vec::new();
        for v in 0..n {
            let pv = &cat.indec(cat.projective(v)).rep;
            for f in pv.hom_basis(target, arrows, p) {
                summands.push(pv);
                maps_out.push(f);
            }
        }
        let p0 = block_diag_rep(&summands, arrows);

        // pi_w : P0_w -> M_w, columns grouped by summand.
        let pi: Vec<Mat> = (0..n)
            .map(|w| {
                let mut m = Mat::zeros(target.dims[w], p0.dims[w]);
                let mut co = 0;
                for f in &maps_out {
                    let fw = &f[w];
                    for i in 0..fw.rows {
                        for j in 0..fw.cols {
                            m.set(i, co + j, fw.get(i, j));
                        }
                    }
                    co += fw.cols;
                }
                m
            })
            .collect();
        for (w, piw) in pi.iter().enumerate() {
            assert_eq!(linalg::rank_mod(piw, p), target.dims[w], "presentation not surjective at vertex {w}");
        }

        let inclusion: Vec<Mat> =
            (0..n).map(|w| Mat::from_cols(p0.dims[w], &linalg::nullspace_mod(&pi[w], p))).collect();
        let kdims: Vec<usize> = inclusion.iter().map(|m| m.cols).collect();
        let kmaps = arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                // Solve inclusion_t * X = P0_a * inclusion_s.
                let rhs = p0.maps[k].mul(&inclusion[s], p);
                linalg::solve_mod(&inclusion[t], &rhs, p).expect("kernel is a subrepresentation")
            })
            .collect();
        let kernel = Representation { dims: kdims, maps: kmaps };
        Presentation { p0, kernel, inclusion }
    }

    pub fn dims_against(&self, cat: &ModCat, n: IndecId, p: u64) -> PresentationDims {
        let arrows = cat.arrows();
        let target = &cat.indec(n).rep;
        let hom_p0 = self.p0.hom_basis(target, arrows, p);
        let hom_k = self.kernel.hom_dim(target, arrows, crate::linalg::Field::Prime(p));
        // Restrict each f : P0 -> N to K and flatten in Hom(K, N) coordinates.
        let restricted: Vec<Vec<u64>> = hom_p0
            .iter()
            .map(|f| {
                let parts: Vec<Mat> = f.iter().zip(&self.inclusion).map(|(fw, iw)| fw.mul(iw, p)).collect();
                Representation::flatten(&parts)
            })
            .collect();
        let rank = if restricted.is_empty() || restricted[0].is_empty() {
            0
        } else {
            linalg::rank_mod(&Mat::from_rows(&restricted), p)
        };
        PresentationDims { hom: hom_p0.len() - rank, ext1: hom_k - rank }
    }
}

/// `Ext^1(m, n)` and `Hom(m, n)` from the presentation of `m`.
pub fn presentation_dims(cat: &ModCat, m: IndecId, n: IndecId) -> PresentationDims {
    let p = match cat.options().field {
        linalg::Field::Prime(p) => p,
        linalg::Field::Rational => linalg::DEFAULT_PRIME,
    };
    Presentation::new(cat, m, p).dims_against(cat, n, p)
}

/// Every pair where the table disagrees with the oracle.
pub fn ext_disagreements(cat: &ModCat) -> Vec<(IndecId, IndecId, usize, PresentationDims)> {
    let p = linalg::DEFAULT_PRIME;
    let mut bad = Vec::new();
    for m in 0..cat.len() {
        let pres = Presentation::new(cat, m, p);
        for n in 0..cat.len() {
            let d = pres.dims_against(cat, n, p);
            if d.ext1 != cat.ext1_dim(m, n) || d.hom != cat.hom_dim(m, n) {
                bad.push((m, n, cat.ext1_dim(m, n), d));
            }
        }
    }
    bad
}
