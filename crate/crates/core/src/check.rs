//! Randomized agreement suites: each constructs random instances from a seed,
//! runs a construction, and compares it pointwise against an oracle.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::convex_function::{evaluate, optimal_value_fn, solution_map, ExtReal};
use crate::error::Result;
use crate::linalg::{add, dot, scale, Matrix, Rat};
use crate::lp::{solve_lp, LpResult, Sense};
use crate::multifunction::{compose, domain, sum, MultiFn};
use crate::oracle::{
    compose_member_oracle, enumerate_basic_solutions, iri_member_oracle, lifted_projection_oracle, linear_image_oracle,
    optval_oracle, sample_grid, sum_member_oracle, vrep_includes,
};
use crate::polyhedron::{h_to_v, intersect, linear_image, member, project, set_equal, v_to_h, CoordSet, HRep};
use crate::random::{
    instance_rng, random_hrep, random_matrix, random_multifn, random_nonempty_hrep, random_proper_pcfunc, HRepShape,
};
use crate::relint::{binding_index_set, relative_interior, relative_interior_point, ri_member, GraphRiDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Roundtrip,
    Projection,
    Compose,
    Sum,
    Optval,
    Relint,
    RiGraph,
    LinearImage,
    Lp,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Roundtrip,
        Suite::Projection,
        Suite::Compose,
        Suite::Sum,
        Suite::Optval,
        Suite::Relint,
        Suite::RiGraph,
        Suite::LinearImage,
        Suite::Lp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Projection => "projection",
            Suite::Compose => "compose",
            Suite::Sum => "sum",
            Suite::Optval => "optval",
            Suite::Relint => "relint",
            Suite::RiGraph => "ri-graph",
            Suite::LinearImage => "linear-image",
            Suite::Lp => "lp",
        }
    }

    /// Instance count used by the acceptance run.
    pub fn default_count(self) -> u64 {
        match self {
            Suite::Roundtrip | Suite::Projection | Suite::Relint => 200,
            Suite::Lp => 300,
            _ => 100,
        }
    }

    fn tag(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub index: u64,
    pub checks: usize,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub instances: Vec<InstanceOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceOutcome> {
        self.instances.iter().filter(|i| i.failure.is_some())
    }

    pub fn total_checks(&self) -> usize {
        self.instances.iter().map(|i| i.checks).sum()
    }
}

/// Runs `count` instances in parallel; the report is ordered by instance index.
pub fn run_suite(suite: Suite, seed: u64, count: u64) -> SuiteReport {
    let instances = (0..count).into_par_iter().map(|index| run_instance(suite, seed, index)).collect();
    SuiteReport { suite, seed, instances }
}

pub fn run_instance(suite: Suite, seed: u64, index: u64) -> InstanceOutcome {
    let mut rng = instance_rng(seed, suite.tag(), index);
    let mut t = Tally::default();
    let run = match suite {
        Suite::Roundtrip => roundtrip(&mut rng, &mut t),
        Suite::Projection => projection(&mut rng, &mut t),
        Suite::Compose => composition(&mut rng, &mut t),
        Suite::Sum => sums(&mut rng, &mut t),
        Suite::Optval => optval(&mut rng, &mut t),
        Suite::Relint => relint(&mut rng, &mut t),
        Suite::RiGraph => ri_graph(&mut rng, &mut t),
        Suite::LinearImage => linear_images(&mut rng, &mut t),
        Suite::Lp => lp(&mut rng, &mut t),
    };
    let failure = match run {
        Ok(()) => t.failure,
        Err(e) => Some(format!("error: {e}")),
    };
    InstanceOutcome { index, checks: t.checks, failure }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn fmt_point(x: &[Rat]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn split(v: &[Rat], at: usize) -> (&[Rat], &[Rat]) {
    v.split_at(at)
}

fn grid_of(p: &HRep, rng: &mut ChaCha8Rng) -> Vec<Vec<Rat>> {
    sample_grid(&h_to_v(p), rng)
}

fn roundtrip(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let small = rng.random_bool(0.5);
    let dim = if small { rng.random_range(1..=3) } else { rng.random_range(1..=4) };
    let p = random_hrep(rng, HRepShape::new(dim, if small { 6 } else { 8 }));
    let v = h_to_v(&p);
    let back = v_to_h(&v);
    t.check(set_equal(&p, &back)?, || format!("v_to_h(h_to_v(P)) differs from P =\n{p}"));
    if p.dim() <= 3 && p.n_rows() <= 6 {
        let e = enumerate_basic_solutions(&p)?;
        t.check(set_equal(&back, &v_to_h(&e))?, || format!("enumeration disagrees on\n{p}"));
        t.check(vrep_includes(&v, &e)? && vrep_includes(&e, &v)?, || format!("generator hulls differ on\n{p}"));
    }
    Ok(())
}

fn projection(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let p = random_hrep(rng, HRepShape::new(4, 8));
    let mut keep: Vec<usize> = sample(rng, 4, 2).into_vec();
    keep.sort_unstable();
    let q = project(&p, &CoordSet::new(keep.clone(), 4)?)?;
    let mut samples = grid_of(&q, rng);
    for u in h_to_v(&p).points() {
        samples.push(keep.iter().map(|&k| u[k].clone()).collect());
    }
    for x in &samples {
        let got = member(&q, x)?;
        let want = lifted_projection_oracle(&p, &keep, x)?;
        t.check(got == want, || format!("projection onto {keep:?} at {}: {got} vs {want}", fmt_point(x)));
    }
    Ok(())
}

fn composition(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let (nx, ny, nz) = (rng.random_range(1..=2), rng.random_range(1..=2), rng.random_range(1..=2));
    let f = random_multifn(rng, nx, ny, 5);
    let g = random_multifn(rng, ny, nz, 5);
    let h = compose(&g, &f)?;
    for w in grid_of(h.graph(), rng) {
        let (x, z) = split(&w, nx);
        let got = member(h.graph(), &w)?;
        let want = compose_member_oracle(&g, &f, x, z)?;
        t.check(got == want, || format!("composition at {}: {got} vs {want}", fmt_point(&w)));
    }
    Ok(())
}

fn sums(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let (nx, ny) = (rng.random_range(1..=2), rng.random_range(1..=2));
    let f1 = random_multifn(rng, nx, ny, 5);
    let f2 = random_multifn(rng, nx, ny, 5);
    let s = sum(&f1, &f2)?;
    for w in grid_of(s.graph(), rng) {
        let (x, z) = split(&w, nx);
        let got = member(s.graph(), &w)?;
        let want = sum_member_oracle(&f1, &f2, x, z)?;
        t.check(got == want, || format!("sum at {}: {got} vs {want}", fmt_point(&w)));
    }
    let both = intersect(&domain(&f1)?, &domain(&f2)?)?;
    t.check(set_equal(&domain(&s)?, &both)?, || "domain of the sum is not the common domain".into());
    Ok(())
}

fn optval(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let (nx, ny) = (rng.random_range(1..=2), rng.random_range(1..=2));
    let phi = random_proper_pcfunc(rng, nx + ny);
    let f = random_multifn(rng, nx, ny, 4);
    let mu = optimal_value_fn(&phi, &f)?;
    for x in grid_of(&domain(&f)?, rng) {
        let got = evaluate(&mu, &x)?;
        let want = optval_oracle(&phi, &f, &x)?;
        t.check(got == want, || format!("optimal value at {}: {got} vs {want}", fmt_point(&x)));
        if let ExtReal::Finite(_) = want {
            let argmin = solution_map(&phi, &f, &x)?;
            t.check(crate::lp::feasible(&argmin), || format!("empty solution set at {}", fmt_point(&x)));
        }
    }
    Ok(())
}

fn average(points: &[Vec<Rat>]) -> Vec<Rat> {
    let first = points[0].clone();
    let total = points[1..].iter().fold(first, |acc, p| add(&acc, p));
    scale(&total, &Rat::new(1.into(), points.len().into()))
}

fn relint(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let dim = rng.random_range(1..=3);
    let p = random_nonempty_hrep(rng, HRepShape::new(dim, 6));
    let v = h_to_v(&p);
    for x in sample_grid(&v, rng) {
        let got = ri_member(&p, &x)?;
        let want = if member(&p, &x)? { iri_member_oracle(&p, &x)? } else { false };
        t.check(got == want, || format!("relative interior at {}: {got} vs {want} for\n{p}", fmt_point(&x)));
    }
    let mut anchors = v.points().to_vec();
    anchors.extend(binding_index_set(&p)?.witnesses().iter().cloned());
    let w = average(&anchors);
    t.check(ri_member(&p, &w)?, || format!("averaged point {} not relatively interior", fmt_point(&w)));
    let r = relative_interior_point(&p)?;
    t.check(relative_interior(&p)?.contains(&r)? && iri_member_oracle(&p, &r)?, || {
        format!("witness {} not relatively interior", fmt_point(&r))
    });
    Ok(())
}

fn ri_graph(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let (nx, ny) = (rng.random_range(1..=3), rng.random_range(1..=3));
    let max_rows = if nx + ny <= 3 { 6 } else { 8 };
    let f: MultiFn = random_multifn(rng, nx, ny, max_rows);
    let ri = relative_interior(f.graph())?;
    let dec = GraphRiDecomposition::new(&f)?;
    let mut samples = grid_of(f.graph(), rng);
    samples.push(relative_interior_point(f.graph())?);
    for w in samples {
        let (x, y) = split(&w, nx);
        let got = ri.contains(&w)?;
        let want = dec.contains(x, y)?;
        t.check(got == want, || format!("graph relative interior at {}: {got} vs {want}", fmt_point(&w)));
    }
    Ok(())
}

fn linear_images(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let (n, m) = (rng.random_range(1..=3), rng.random_range(1..=3));
    let d = random_nonempty_hrep(rng, HRepShape::new(n, 6));
    let tm: Matrix = random_matrix(rng, m, n, 2);
    let img = linear_image(&tm, &d)?;
    let mut samples = grid_of(&img, rng);
    for u in h_to_v(&d).points() {
        samples.push(tm.mul_vec(u));
    }
    for y in &samples {
        let got = member(&img, y)?;
        let want = linear_image_oracle(&tm, &d, y)?;
        t.check(got == want, || format!("linear image at {}: {got} vs {want}", fmt_point(y)));
    }
    Ok(())
}

fn lp(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let (p, vertices) = loop {
        let dim = rng.random_range(1..=3);
        let p = random_hrep(rng, HRepShape::new(dim, 6));
        let e = enumerate_basic_solutions(&p)?;
        if !e.is_empty() && e.is_bounded() {
            break (p, e.points().to_vec());
        }
    };
    let c: Vec<Rat> = (0..p.dim()).map(|_| Rat::from_integer(rng.random_range(-3..=3).into())).collect();
    for sense in [Sense::Min, Sense::Max] {
        let values = vertices.iter().map(|u| dot(&c, u));
        let best = match sense {
            Sense::Min => values.min(),
            Sense::Max => values.max(),
        }
        .expect("nonempty");
        match solve_lp(&c, &p, sense)? {
            LpResult::Optimal { value, point } => {
                t.check(value == best, || format!("{sense:?} value {value} but best vertex gives {best}"));
                t.check(member(&p, &point)? && dot(&c, &point) == value, || "reported point inconsistent".into());
            }
            other => t.check(false, || format!("{sense:?} returned {:?} on a bounded instance", other.status())),
        }
    }
    Ok(())
}
