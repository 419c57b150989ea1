//! The full experiment suite over one web.

use crate::double_cover::{monodromy_trial, random_pencil, random_ruling_point, LoopKind, MonodromyCertificate};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fundamental::{fundamental_degree, FundamentalDegree, FUNDAMENTAL_DEGREE};
use crate::nodes::{find_nodes, NodeSet, NODE_COUNT, RESIDUAL_TOL};
use crate::projective::{ProjLine, RandomConfig};
use crate::report::{ExperimentReport, Record, TOOL};
use crate::reye::{
    delta, is_reye_line, pencil_distance, rays_in_random_plane, rays_through_random_point, sample_reye_lines,
    Bitangent, RaysInPlane, RaysThroughPoint, ReyeSample, PENCIL_DIST, RAYS_IN_PLANE, RAYS_THROUGH_POINT,
};
use crate::rng::Rng;
use crate::schubert::porteous_reye;
use crate::web::{generate_web, genericity_check, GenericityReport, Web};
use serde_json::json;
use std::collections::BTreeMap;
use std::time::Instant;

/// Number of base points: `o` and the seven second points on the rays.
pub const BASE_POINTS: usize = 8;
const REDRAWS: usize = 5;

/// RNG streams of the experiments, derived from the suite seed.
mod stream {
    pub const RAYS: u64 = 0x7261_7973;
    pub const PLANE: u64 = 0x706c_616e;
    pub const MONODROMY: u64 = 0x6d6f_6e6f;
    pub const FANO: u64 = 0x6661_6e6f;
    pub const SAMPLE: u64 = 0x7361_6d70;
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub exec: Exec,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            samples: 20,
            tol: crate::projective::DEFAULT_TOL,
            exec: Exec::Parallel,
            timings: false,
        }
    }
}

impl SuiteConfig {
    fn rng(&self, stream: u64) -> Rng {
        Rng::derive(self.seed, stream)
    }
}

/// The web of a run: from a file, or generated from the seed.
pub fn obtain_web(web: Option<Web>, cfg: &SuiteConfig) -> Result<(Web, GenericityReport)> {
    match web {
        Some(w) => {
            let seed = w.seed().unwrap_or(cfg.seed);
            let rep = genericity_check(&w, seed, cfg.exec);
            Ok((w, rep))
        }
        None => generate_web(cfg.seed, RandomConfig::default(), cfg.exec),
    }
}

fn web_seed(w: &Web, cfg: &SuiteConfig) -> u64 {
    w.seed().unwrap_or(cfg.seed)
}

pub fn genericity_record(rep: &GenericityReport) -> Record {
    Record::new("genericity", "the web passes every genericity check")
        .pass_if(rep.pass)
        .detail(&rep.checks)
}

pub fn nodes_record(w: &Web, cfg: &SuiteConfig) -> (Record, Option<NodeSet>) {
    let claim = "ten distinct rank-2 members, minor residual < 1e-12, kernel dimension 2";
    match find_nodes(w, web_seed(w, cfg), cfg.exec) {
        Ok(set) => {
            let ok = set
                .nodes
                .iter()
                .all(|n| n.residual < RESIDUAL_TOL && n.kernel_dim == 2 && n.hessian_rank == 3);
            let detail: Vec<_> = set
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "z": n.member.z,
                        "residual": n.residual,
                        "kernel_dim": n.kernel_dim,
                        "hessian_rank": n.hessian_rank,
                        "singular_values": n.singular_values,
                    })
                })
                .collect();
            let rec = Record::new("nodes", claim)
                .count(NODE_COUNT, set.len())
                .pass_if(ok && set.len() == NODE_COUNT)
                .detail(json!({"nodes": detail, "pencils_used": set.pencils_used}));
            (rec, Some(set))
        }
        Err(e) => (Record::failed("nodes", claim, &e), None),
    }
}

fn lines_detail(lines: &[ProjLine]) -> Vec<[num_complex::Complex64; 6]> {
    lines.iter().map(|l| *l.plucker()).collect()
}

pub fn rays_record(w: &Web, cfg: &SuiteConfig) -> (Record, Option<RaysThroughPoint>) {
    let claim = "seven Reye lines through a general point";
    let mut rng = cfg.rng(stream::RAYS);
    match rays_through_random_point(w, &mut rng, REDRAWS) {
        Ok(r) => {
            let members = r.rays.iter().filter(|l| is_reye_line(w, l, cfg.tol).is_some()).count();
            let through = r.rays.iter().filter(|l| *l.span().0 == r.o).count();
            let ok = r.rays.len() == RAYS_THROUGH_POINT
                && members == RAYS_THROUGH_POINT
                && through == RAYS_THROUGH_POINT
                && r.exact_split;
            let rec = Record::new("rays", claim)
                .count(RAYS_THROUGH_POINT, r.rays.len())
                .pass_if(ok)
                .detail(json!({
                    "o": r.o,
                    "rays": lines_detail(&r.rays),
                    "members": members,
                    "contain_o": through,
                    "exact_split": r.exact_split,
                    "real_rays": r.real_rays,
                }));
            (rec, Some(r))
        }
        Err(e) => (Record::failed("rays", claim, &e), None),
    }
}

pub fn base_points_record(r: Option<&RaysThroughPoint>, cfg: &SuiteConfig) -> Record {
    let claim = "eight distinct base points of the net through o";
    let Some(r) = r else {
        return Record::failed("base_points", claim, &Error::Precondition("no rays".into()));
    };
    let n = r.base_points.len();
    let mut min_dist = f64::INFINITY;
    for (i, p) in r.base_points.iter().enumerate() {
        for o in &r.base_points[i + 1..] {
            min_dist = min_dist.min(p.distance(o));
        }
    }
    let spread = r.spreads.iter().copied().fold(0.0, f64::max);
    Record::new("base_points", claim)
        .count(BASE_POINTS, n)
        .pass_if(n == BASE_POINTS && min_dist > 1e-6 && r.base_residual < cfg.tol && spread < cfg.tol)
        .detail(json!({
            "points": r.base_points,
            "residual": r.base_residual,
            "min_distance": min_dist,
            "parameter_spread": spread,
        }))
}

pub fn plane_record(w: &Web, cfg: &SuiteConfig) -> (Record, Option<RaysInPlane>) {
    let claim = "three Reye lines in a general plane";
    let mut rng = cfg.rng(stream::PLANE);
    match rays_in_random_plane(w, &mut rng, REDRAWS) {
        Ok(r) => {
            let members = r.rays.iter().filter(|l| is_reye_line(w, l, cfg.tol).is_some()).count();
            let rec = Record::new("plane_rays", claim)
                .count(RAYS_IN_PLANE, r.rays.len())
                .pass_if(r.rays.len() == RAYS_IN_PLANE && members == RAYS_IN_PLANE && r.incidence_residual < 1e-12)
                .detail(json!({
                    "plane": r.plane,
                    "rays": lines_detail(&r.rays),
                    "members": members,
                    "incidence_residual": r.incidence_residual,
                    "real_rays": r.real_rays,
                }));
            (rec, Some(r))
        }
        Err(e) => (Record::failed("plane_rays", claim, &e), None),
    }
}

/// Sampled Reye lines with their bitangency certificates.
pub fn bitangents(w: &Web, cfg: &SuiteConfig) -> Result<Vec<(ReyeSample, Result<Bitangent>)>> {
    let samples = sample_reye_lines(w, cfg.seed ^ stream::SAMPLE, cfg.samples, cfg.exec)?;
    let certs = cfg.exec.map(samples.len(), |i| delta(w, &samples[i].reye));
    Ok(samples.into_iter().zip(certs).collect())
}

pub fn bitangency_record(w: &Web, cfg: &SuiteConfig) -> (Record, Vec<ReyeSample>) {
    let claim = "the pencil of every sampled Reye line is bitangent to the symmetroid";
    let pairs = match bitangents(w, cfg) {
        Ok(p) => p,
        Err(e) => return (Record::failed("bitangency", claim, &e), Vec::new()),
    };
    let mut passed = 0;
    let mut rows = Vec::new();
    for (s, cert) in &pairs {
        match cert {
            Ok(b) => {
                let ok = b.tangency_ranks.iter().all(|&r| r == 3) && s.reye.containment_residual < cfg.tol;
                passed += ok as usize;
                rows.push(json!({
                    "line": s.reye.line.plucker(),
                    "pair_gap": b.square.pair_gap,
                    "fit_residual": b.square.fit_residual,
                    "separation": b.square.separation,
                    "tangency_ranks": b.tangency_ranks,
                }));
            }
            Err(e) => rows.push(json!({"line": s.reye.line.plucker(), "error": e.to_string()})),
        }
    }
    let mut injective = true;
    for (i, a) in pairs.iter().enumerate() {
        for b in &pairs[i + 1..] {
            if pencil_distance(&a.0.reye.pencil, &b.0.reye.pencil) <= PENCIL_DIST {
                injective = false;
            }
        }
    }
    let rec = Record::new("bitangency", claim)
        .count(cfg.samples, passed)
        .pass_if(passed == cfg.samples && injective)
        .detail(json!({"samples": rows, "injective": injective}));
    (rec, pairs.into_iter().map(|p| p.0).collect())
}

/// The three monodromy trials: one simple branch root, one bitangent
/// contact point and the loop around all four roots.
pub fn monodromy_certificates(
    w: &Web,
    samples: &[ReyeSample],
    cfg: &SuiteConfig,
) -> Vec<(LoopKind, Result<MonodromyCertificate>)> {
    let mut rng = cfg.rng(stream::MONODROMY);
    let mut out = Vec::new();
    let pencil = random_pencil(w, &mut rng);
    match pencil {
        Ok(p) => {
            out.push((
                LoopKind::SimpleBranch,
                monodromy_trial(w, p.clone(), LoopKind::SimpleBranch, 0, &mut rng),
            ));
            let contact = match samples.first() {
                Some(s) => monodromy_trial(w, s.reye.pencil.clone(), LoopKind::BitangentContact, 0, &mut rng),
                None => Err(Error::Precondition("no sampled Reye line".into())),
            };
            out.push((LoopKind::BitangentContact, contact));
            out.push((LoopKind::AllBranches, monodromy_trial(w, p, LoopKind::AllBranches, 0, &mut rng)));
        }
        Err(e) => out.push((LoopKind::SimpleBranch, Err(e))),
    }
    out
}

pub fn expected_swap(kind: LoopKind) -> bool {
    kind == LoopKind::SimpleBranch
}

pub fn monodromy_record(w: &Web, samples: &[ReyeSample], cfg: &SuiteConfig) -> Record {
    let claim = "rulings swap around a simple branch root and not around a bitangent contact or all four roots";
    let certs = monodromy_certificates(w, samples, cfg);
    let mut ok = certs.len() == 3;
    let mut rows = Vec::new();
    for (kind, c) in &certs {
        match c {
            Ok(c) => {
                ok &= c.swap == expected_swap(*kind);
                rows.push(json!({
                    "kind": kind,
                    "swap": c.swap,
                    "expected_swap": expected_swap(*kind),
                    "loop": c.curve,
                    "branch_roots": c.branch_roots,
                    "steps": c.steps.len(),
                    "halvings": c.halvings,
                }));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({"kind": kind, "error": e.to_string()}));
            }
        }
    }
    Record::new("monodromy", claim).pass_if(ok).detail(rows)
}

pub fn fano_result(w: &Web, cfg: &SuiteConfig) -> Result<FundamentalDegree> {
    let mut rng = cfg.rng(stream::FANO);
    let mut last = Error::GenericityExhausted { attempts: REDRAWS };
    for _ in 0..REDRAWS {
        let z: Vec<_> = (0..4).map(|_| rng.complex()).collect();
        let member = w.member(&z)?;
        let attempt = random_ruling_point(w, &member, &mut rng).and_then(|rp| fundamental_degree(w, &rp));
        match attempt {
            Ok(f) => return Ok(f),
            Err(e) => last = e,
        }
    }
    Err(last)
}

pub fn fano_record(w: &Web, cfg: &SuiteConfig) -> Record {
    let claim = "the determinant along a ruling has degree 6 with six Reye lines as roots";
    match fano_result(w, cfg) {
        Ok(f) => Record::new("fano_degree", claim)
            .count(FUNDAMENTAL_DEGREE, f.degree)
            .pass_if(f.degree == FUNDAMENTAL_DEGREE && f.members == FUNDAMENTAL_DEGREE && f.pairwise_skew)
            .detail(json!({
                "members": f.members,
                "pairwise_skew": f.pairwise_skew,
                "roots": f.roots,
                "lines": lines_detail(&f.lines),
                "excess": f.excess,
                "chart_residual": f.chart_residual,
            })),
        Err(e) => Record::failed("fano_degree", claim, &e),
    }
}

pub fn chow_record(rays: Option<usize>, plane: Option<usize>) -> Record {
    let claim = "Porteous class 7 s2 + 3 s11 of degree 10, order and class equal to the ray counts";
    let r = porteous_reye();
    let ok = r.order == 7
        && r.class_number == 3
        && r.degree == 10
        && rays == Some(r.order as usize)
        && plane == Some(r.class_number as usize);
    Record::new("chow", claim)
        .count(10, r.degree as usize)
        .pass_if(ok)
        .detail(json!({
            "class": r.class.to_string(),
            "order": r.order,
            "class_number": r.class_number,
            "degree": r.degree,
            "rays_through_point": rays,
            "rays_in_plane": plane,
            "known": crate::schubert::record_known_classes(),
        }))
}

/// Run every experiment and collect the report.
pub fn full_suite(web: Option<Web>, cfg: &SuiteConfig) -> Result<ExperimentReport> {
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, f64>| {
        timings.insert(name.to_string(), clock.elapsed().as_secs_f64());
        clock = Instant::now();
    };
    let (w, generic) = obtain_web(web, cfg)?;
    let mut records = vec![genericity_record(&generic)];
    lap("genericity", &mut timings);
    let (nodes, _) = nodes_record(&w, cfg);
    records.push(nodes);
    lap("nodes", &mut timings);
    let (rays, rays_data) = rays_record(&w, cfg);
    records.push(rays);
    lap("rays", &mut timings);
    let (plane, plane_data) = plane_record(&w, cfg);
    records.push(plane);
    lap("plane_rays", &mut timings);
    records.push(base_points_record(rays_data.as_ref(), cfg));
    let (bit, samples) = bitangency_record(&w, cfg);
    records.push(bit);
    lap("bitangency", &mut timings);
    records.push(monodromy_record(&w, &samples, cfg));
    lap("monodromy", &mut timings);
    records.push(fano_record(&w, cfg));
    lap("fano_degree", &mut timings);
    records.push(chow_record(
        rays_data.as_ref().map(|r| r.rays.len()),
        plane_data.as_ref().map(|r| r.rays.len()),
    ));
    let counts = records
        .iter()
        .filter_map(|r| r.found.map(|f| (r.name.clone(), f)))
        .collect();
    let pass = records.iter().all(|r| r.pass);
    Ok(ExperimentReport {
        tool: TOOL.into(),
        seed: cfg.seed,
        web: w.to_file(),
        tolerance: cfg.tol,
        samples: cfg.samples,
        records,
        counts,
        timings: cfg.timings.then_some(timings),
        pass,
    })
}
