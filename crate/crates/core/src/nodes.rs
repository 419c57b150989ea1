//! The ten nodes of the symmetroid: members of the web of rank 2.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::{numeric_rank, CMat};
use crate::poly::{binary_roots, MultiPoly};
use crate::projective::{cmp_keys, ProjPoint, DEFAULT_TOL};
use crate::rng::Rng;
use crate::scalar::{cnorm, C64};
use crate::web::{pencil_quartic_mats, symmetroid, Web, WebMember};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Expected number of nodes on a general web.
pub const NODE_COUNT: usize = 10;
/// Two nodes closer than this (projective sine distance) are one.
pub const DEDUP_DIST: f64 = 1e-4;
/// Required relative minor residual after refinement.
pub const RESIDUAL_TOL: f64 = 1e-12;

const TRIPLES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
const MAX_ITER: usize = 80;

#[derive(Debug, Clone, Copy)]
pub struct NodeConfig {
    pub max_pencils: usize,
    pub batch: usize,
}

impl Default for NodeConfig {
    fn default() -> Self {
        NodeConfig {
            max_pencils: 200,
            batch: 16,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Node {
    pub member: WebMember,
    /// Largest 3x3 minor of `M(z)` relative to `|M(z)|^3`.
    pub residual: f64,
    /// Dimension of the kernel of `M(z)` at tolerance 1e-8.
    pub kernel_dim: usize,
    /// Singular values of `M(z)` divided by the largest.
    pub singular_values: Vec<f64>,
    /// Rank of the Hessian of the symmetroid at the node; 3 for an ordinary
    /// node of a quartic surface.
    pub hessian_rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeSet {
    pub nodes: Vec<Node>,
    pub pencils_used: usize,
    pub starts_used: usize,
}

impl NodeSet {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn points(&self) -> Vec<ProjPoint> {
        self.nodes.iter().map(|n| n.member.z).collect()
    }
}

fn det3(m: &CMat, r: &[usize; 3], c: &[usize; 3]) -> C64 {
    let e = |i: usize, j: usize| m[(r[i], c[j])];
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Index pairs of the ten distinct minors of a symmetric 4x4 matrix.
fn minor_pairs() -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(10);
    for a in 0..4 {
        for b in a..4 {
            v.push((a, b));
        }
    }
    v
}

/// Minors and their Jacobian in `z` at the member `z`.
fn minors_and_jacobian(w: &Web, z: &[C64]) -> (Vec<C64>, CMat, f64) {
    let m = w.matrix_at(z);
    let pairs = minor_pairs();
    let mut f = Vec::with_capacity(pairs.len());
    let mut jac = CMat::zeros(pairs.len(), 4);
    for (row, &(a, b)) in pairs.iter().enumerate() {
        let (r, c) = (&TRIPLES[a], &TRIPLES[b]);
        f.push(det3(&m, r, c));
        // d det N = sum adj(N)_{ji} dN_{ij}
        let mut cof = [[C64::zero(); 3]; 3];
        for (i, row_c) in cof.iter_mut().enumerate() {
            for (j, v) in row_c.iter_mut().enumerate() {
                let ri: Vec<usize> = (0..3).filter(|&x| x != i).map(|x| r[x]).collect();
                let cj: Vec<usize> = (0..3).filter(|&x| x != j).map(|x| c[x]).collect();
                let d = m[(ri[0], cj[0])] * m[(ri[1], cj[1])] - m[(ri[0], cj[1])] * m[(ri[1], cj[0])];
                *v = if (i + j) % 2 == 0 { d } else { -d };
            }
        }
        for k in 0..4 {
            let ak = &w.float_basis()[k];
            let mut s = C64::zero();
            for i in 0..3 {
                for j in 0..3 {
                    s += cof[i][j] * ak[(r[i], c[j])];
                }
            }
            jac[(row, k)] = s;
        }
    }
    let scale = m.frobenius().powi(3);
    (f, jac, scale)
}

fn relative_residual(f: &[C64], scale: f64) -> f64 {
    f.iter().map(|x| x.norm()).fold(0.0, f64::max) / scale
}

/// Levenberg-Marquardt on the minors, moving orthogonally to `z` and
/// renormalizing after each step.
fn refine(w: &Web, start: &[C64]) -> Option<(Vec<C64>, f64)> {
    let n0 = cnorm(start);
    let mut z: Vec<C64> = start.iter().map(|x| x / n0).collect();
    let (mut f, mut jac, mut scale) = minors_and_jacobian(w, &z);
    let mut res = relative_residual(&f, scale);
    let mut lambda = 1e-3;
    for _ in 0..MAX_ITER {
        if res < 1e-14 {
            break;
        }
        let jn = jac.frobenius();
        let rows = 10 + 1 + 4;
        let mut big = CMat::zeros(rows, 4);
        let mut rhs = vec![C64::zero(); rows];
        for i in 0..10 {
            for k in 0..4 {
                big[(i, k)] = jac[(i, k)] / scale;
            }
            rhs[i] = -f[i] / scale;
        }
        for k in 0..4 {
            big[(10, k)] = z[k].conj() * (jn / scale).max(1.0);
        }
        let mu = lambda * jn / scale;
        for k in 0..4 {
            big[(11 + k, k)] = C64::new(mu, 0.0);
        }
        let step = big.lstsq(&rhs, 1e-14);
        let trial: Vec<C64> = z.iter().zip(&step).map(|(a, b)| a + b).collect();
        let tn = cnorm(&trial);
        if !(tn > 0.0) || !tn.is_finite() {
            return None;
        }
        let trial: Vec<C64> = trial.iter().map(|x| x / tn).collect();
        let (tf, tj, ts) = minors_and_jacobian(w, &trial);
        let tres = relative_residual(&tf, ts);
        if tres < res {
            let small = cnorm(&step) < 1e-15;
            z = trial;
            f = tf;
            jac = tj;
            scale = ts;
            res = tres;
            lambda = (lambda / 5.0).max(1e-12);
            if small {
                break;
            }
        } else {
            lambda *= 4.0;
            if lambda > 1e8 {
                break;
            }
        }
    }
    Some((z, res))
}

/// Hessian rank of a quartic at a point, at a loose tolerance suited to a
/// point known to ~1e-13.
fn hessian_rank(second: &[Vec<MultiPoly<C64>>], z: &[C64]) -> usize {
    let h = CMat::from_fn(4, 4, |i, j| second[i][j].eval(z));
    numeric_rank(&h, 1e-6)
}

fn second_partials(w: &Web) -> Vec<Vec<MultiPoly<C64>>> {
    let s = symmetroid(w).to_complex();
    (0..4)
        .map(|i| {
            let si = s.partial(i);
            (0..4).map(|j| si.partial(j)).collect()
        })
        .collect()
}

/// Candidate nodes from the roots of one random pencil quartic.
fn pencil_candidates(w: &Web, seed: u64, index: usize) -> Vec<(Vec<C64>, f64)> {
    let mut rng = Rng::derive(seed, 0x6e6f_6465_0000_0000 ^ index as u64);
    let a: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
    let b: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
    let Ok(c) = pencil_quartic_mats(w.matrix_at(&a), w.matrix_at(&b)) else {
        return Vec::new();
    };
    let Ok(roots) = binary_roots(&c) else {
        return Vec::new();
    };
    roots
        .iter()
        .filter_map(|st| {
            let z: Vec<C64> = (0..4).map(|i| st[0] * a[i] + st[1] * b[i]).collect();
            refine(w, &z)
        })
        .filter(|(_, r)| *r < RESIDUAL_TOL)
        .collect()
}

fn certify(w: &Web, z: &[C64]) -> Option<(WebMember, usize, Vec<f64>)> {
    let member = w.member(z).ok()?;
    let sv = member.matrix().svd().relative();
    let rank = sv.iter().filter(|&&s| s > DEFAULT_TOL).count();
    (rank == 2).then(|| (member, 4 - rank, sv))
}

/// Multi-start search for the rank-2 members of the web.
///
/// Pencils are processed in batches; the search stops one batch after at
/// least ten distinct nodes have been found. Fewer or more than ten after
/// the budget is a [`Error::CountMismatch`].
pub fn find_nodes(w: &Web, seed: u64, exec: Exec) -> Result<NodeSet> {
    find_nodes_with(w, seed, exec, NodeConfig::default())
}

pub fn find_nodes_with(w: &Web, seed: u64, exec: Exec, cfg: NodeConfig) -> Result<NodeSet> {
    let set = search_nodes(w, seed, exec, cfg);
    if set.len() != NODE_COUNT {
        return Err(Error::CountMismatch {
            what: "symmetroid nodes".into(),
            expected: NODE_COUNT,
            found: set.len(),
        });
    }
    Ok(set)
}

/// The search itself, returning whatever was found.
pub fn search_nodes(w: &Web, seed: u64, exec: Exec, cfg: NodeConfig) -> NodeSet {
    let mut found: Vec<(WebMember, f64, usize, Vec<f64>)> = Vec::new();
    let mut pencils = 0;
    let mut starts = 0;
    let mut confirmed = false;
    while pencils < cfg.max_pencils && !confirmed {
        // one extra batch after reaching the count guards against stray nodes
        if found.len() >= NODE_COUNT {
            confirmed = true;
        }
        let n = cfg.batch.min(cfg.max_pencils - pencils);
        let batch = exec.map(n, |i| pencil_candidates(w, seed, pencils + i));
        pencils += n;
        for cands in batch {
            starts += 4;
            for (z, res) in cands {
                let Some((member, kdim, sv)) = certify(w, &z) else {
                    continue;
                };
                if found.iter().all(|f| f.0.z.distance(&member.z) > DEDUP_DIST) {
                    found.push((member, res, kdim, sv));
                }
            }
        }
    }
    let second = second_partials(w);
    let mut nodes: Vec<Node> = found
        .into_iter()
        .map(|(member, residual, kernel_dim, singular_values)| {
            let hessian_rank = hessian_rank(&second, member.z.coords());
            Node {
                member,
                residual,
                kernel_dim,
                singular_values,
                hessian_rank,
            }
        })
        .collect();
    nodes.sort_by(|a, b| cmp_keys(&a.member.z.sort_key(), &b.member.z.sort_key()));
    NodeSet {
        nodes,
        pencils_used: pencils,
        starts_used: starts,
    }
}

/// Member of the pencil through a node and a second member at which the
/// pencil quartic vanishes: the parameter `(1 : 0)` is the node itself.
pub fn pencil_through(w: &Web, node: &WebMember, other: &[C64]) -> Result<[C64; 5]> {
    pencil_quartic_mats(w.matrix_at(node.z.coords()), w.matrix_at(other))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::RandomConfig;
    use num_traits::One;

    #[test]
    fn diagonal_web_coordinate_points_have_rank_two() {
        let w = Web::diagonal();
        for a in 0..4 {
            for b in a + 1..4 {
                let mut z = [C64::zero(); 4];
                z[a] = C64::one();
                z[b] = C64::one();
                let m = w.member(&z).unwrap();
                assert_eq!(crate::web::member_rank(&m), 2);
                let (f, _, s) = minors_and_jacobian(&w, &z);
                assert!(relative_residual(&f, s) < 1e-15);
            }
        }
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let mut rng = Rng::new(3);
        let w = Web::random_unchecked(&mut rng, RandomConfig::default(), None);
        let z: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
        let (f, j, _) = minors_and_jacobian(&w, &z);
        let h = 1e-6;
        for k in 0..4 {
            let mut zp = z.clone();
            zp[k] += h;
            let (fp, _, _) = minors_and_jacobian(&w, &zp);
            for i in 0..10 {
                let fd = (fp[i] - f[i]) / h;
                assert!((fd - j[(i, k)]).norm() < 1e-3 * (1.0 + j[(i, k)].norm()));
            }
        }
    }

    #[test]
    fn random_web_has_ten_nodes() {
        let mut rng = Rng::new(11);
        let w = Web::random_unchecked(&mut rng, RandomConfig::default(), None);
        let set = find_nodes(&w, 11, Exec::Parallel).unwrap();
        let sym = symmetroid(&w).to_complex();
        for n in &set.nodes {
            assert_eq!(n.kernel_dim, 2);
            assert!(n.residual < RESIDUAL_TOL);
            assert_eq!(n.hessian_rank, 3);
            let z = n.member.z.coords();
            assert!(sym.eval(z).norm() < 1e-9 * sym.coeff_norm());
        }
    }

    #[test]
    fn thread_mode_does_not_change_nodes() {
        let mut rng = Rng::new(12);
        let w = Web::random_unchecked(&mut rng, RandomConfig::default(), None);
        let a = search_nodes(&w, 5, Exec::Sequential, NodeConfig::default());
        let b = search_nodes(&w, 5, Exec::Parallel, NodeConfig::default());
        assert_eq!(a.points(), b.points());
    }
}
