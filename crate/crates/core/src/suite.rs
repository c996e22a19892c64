//! Named verification checks over a battery of instances.

use std::collections::VecDeque;

use serde::Serialize;

use crate::algebra::{FunctionVector, Rational};
use crate::error::{Error, Result};
use crate::lattice::{ElementId, Family, GraphLattice, LatticeElement, SizeCaps};
use crate::norton::Norton;
use crate::spectral::{constants, SpectralContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub label: String,
    #[serde(flatten)]
    pub family: Family,
    pub status: Status,
    pub vertices: Option<usize>,
    pub skipped_reason: Option<String>,
    pub checks: Vec<CheckResult>,
}

impl InstanceReport {
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub passed: bool,
    pub checks_passed: usize,
    pub checks_failed: usize,
    pub instances_skipped: usize,
    pub instances: Vec<InstanceReport>,
}

impl SuiteReport {
    pub fn from_instances(instances: Vec<InstanceReport>) -> Self {
        let all = || instances.iter().flat_map(|i| &i.checks);
        let checks_passed = all().filter(|c| c.status == Status::Pass).count();
        let checks_failed = all().filter(|c| c.status == Status::Fail).count();
        let instances_skipped = instances.iter().filter(|i| i.status == Status::Skipped).count();
        SuiteReport {
            passed: checks_failed == 0,
            checks_passed,
            checks_failed,
            instances_skipped,
            instances,
        }
    }
}

/// Limits for the suite. Exact verification is far more expensive than
/// enumeration, so it has its own vertex cap on top of the build caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub caps: SizeCaps,
    pub max_verify_vertices: usize,
}

pub const DEFAULT_MAX_VERIFY_VERTICES: usize = 400;

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            caps: SizeCaps::default(),
            max_verify_vertices: DEFAULT_MAX_VERIFY_VERTICES,
        }
    }
}

/// The built-in battery, in report order.
pub fn battery() -> Vec<Family> {
    let mut out = vec![
        Family::Johnson { n: 4, k: 2 },
        Family::Johnson { n: 5, k: 2 },
        Family::Johnson { n: 6, k: 2 },
        Family::Johnson { n: 7, k: 3 },
    ];
    out.extend((2..=5).map(|n| Family::Hamming { n }));
    out.extend([
        Family::Grassmann { n: 4, k: 2, q: 2 },
        Family::Grassmann { n: 4, k: 2, q: 3 },
        Family::Grassmann { n: 6, k: 2, q: 2 },
    ]);
    out
}

/// Runs every check on one instance. Invalid parameters and size caps are
/// errors; failing checks are reported in the result.
pub fn verify_instance(family: Family, options: &SuiteOptions) -> Result<InstanceReport> {
    family.validate()?;
    options.caps.check(&family)?;
    let vertices = family.vertex_count();
    if vertices > options.max_verify_vertices.into() {
        return Err(Error::SizeCap(format!(
            "{family} has {vertices} vertices, exact verification cap is {}",
            options.max_verify_vertices
        )));
    }
    let lattice = GraphLattice::build_with_caps(family, options.caps)?;
    let mut checks = Vec::new();
    let mut run = |name: &'static str, f: &dyn Fn() -> Result<Option<String>>| {
        let (status, detail) = match f() {
            Ok(detail) => (Status::Pass, detail),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        checks.push(CheckResult { name, status, detail });
    };

    run("lattice.atomic", &|| atomic(&lattice));
    run("lattice.rank_modularity", &|| rank_modularity(&lattice));
    run("lattice.cover_property", &|| cover_property(&lattice));
    run("lattice.atom_joins", &|| atom_joins(&lattice));
    run("counts.level_counts", &|| level_counts(&lattice));

    match SpectralContext::new(&lattice) {
        Err(e) => run("filtration.nested", &|| Err(e.clone())),
        Ok(ctx) => {
            let ctx = &ctx;
            run("lattice.distance_bfs", &|| distance_bfs(ctx));
            run("embedding.iota_products", &|| iota_products(ctx));
            run("embedding.star_identities", &|| star_identities(ctx));
            run("embedding.vertex_lower_star", &|| vertex_lower_star(ctx));
            run("embedding.cover_sum_recursion", &|| cover_sum_recursion(ctx));
            run("filtration.nested", &|| filtration(ctx));
            run("filtration.adjacency_residual", &|| adjacency_residual(ctx));
            run("spectrum.adjacency_operator", &|| adjacency_operator(ctx));
            run("spectrum.distance_regular", &|| distance_regular(ctx));
            run("spectrum.eigenspaces", &|| {
                let t = ctx.verify_eigenspaces()?;
                let dims: Vec<String> = t.rows.iter().map(|r| r.dim.to_string()).collect();
                Ok(Some(format!("dims ({})", dims.join(","))))
            });
            run("frame.u_matrix", &|| u_matrix(ctx));
            run("frame.mu_expansion", &|| {
                let mus = (0..=ctx.diameter()).map(|j| ctx.mu(j).map(|m| m.to_string())).collect::<Result<Vec<_>>>()?;
                Ok(Some(format!("mu ({})", mus.join(","))))
            });
            run("frame.mu1_closed_form", &|| mu1_closed_form(ctx));
            run("frame.tight_frame", &|| {
                for j in 0..=ctx.diameter() {
                    ctx.tight_frame_check(j)?;
                }
                Ok(None)
            });
            match Norton::new(ctx).and_then(|n| n.verify()) {
                Err(e) => run("norton.closed_forms", &|| Err(e.clone())),
                Ok(rep) => {
                    let flag = |ok: bool, name: &str| {
                        if ok {
                            Ok(None)
                        } else {
                            Err(Error::verification(name, "identity fails"))
                        }
                    };
                    run("norton.closed_forms", &|| {
                        if rep.pairs_verified == rep.pairs_checked {
                            Ok(Some(format!("{}/{} pairs", rep.pairs_verified, rep.pairs_checked)))
                        } else {
                            let c = rep.counterexample.as_ref().map(|c| {
                                format!(" first mismatch at ({}, {})", serde_json::json!(c.tau), serde_json::json!(c.sigma))
                            });
                            Err(Error::verification(
                                "norton.closed_forms",
                                format!(
                                    "{}/{} pairs agree;{}",
                                    rep.pairs_verified,
                                    rep.pairs_checked,
                                    c.unwrap_or_default()
                                ),
                            ))
                        }
                    });
                    run("norton.join_projection", &|| flag(rep.checks.join_projection, "norton.join_projection"));
                    run("norton.triple_inner_products", &|| {
                        flag(rep.checks.triple_inner_products, "norton.triple_inner_products")
                    });
                    run("norton.atom_sum_zero", &|| flag(rep.checks.atom_sum_zero, "norton.atom_sum_zero"));
                    run("norton.frame_projection", &|| flag(rep.checks.frame_projection, "norton.frame_projection"));
                    if let Some(ok) = rep.checks.sign_symmetry {
                        run("norton.sign_symmetry", &|| flag(ok, "norton.sign_symmetry"));
                    }
                    run("norton.associativity", &|| {
                        Ok(Some(match rep.associativity.witness {
                            Some([t, s, r]) => format!("nonassociative: atoms ({t},{s},{r})"),
                            None => format!("associative on all {} triples", rep.associativity.triples_checked),
                        }))
                    });
                }
            }
        }
    }

    let status = if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(InstanceReport {
        label: family.label(),
        family,
        status,
        vertices: Some(lattice.vertex_count()),
        skipped_reason: None,
        checks,
    })
}

/// Runs the battery; instances over a size cap are reported as skipped.
pub fn run_battery(families: &[Family], options: &SuiteOptions) -> Result<SuiteReport> {
    let mut instances = Vec::with_capacity(families.len());
    for &family in families {
        match verify_instance(family, options) {
            Ok(r) => instances.push(r),
            Err(Error::SizeCap(reason)) => instances.push(InstanceReport {
                label: family.label(),
                family,
                status: Status::Skipped,
                vertices: None,
                skipped_reason: Some(format!("size cap: {reason}")),
                checks: Vec::new(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(SuiteReport::from_instances(instances))
}

fn fail(check: &str, detail: String) -> Result<Option<String>> {
    Err(Error::verification(check, detail))
}

fn show(e: &LatticeElement) -> String {
    serde_json::to_string(e).expect("elements serialize")
}

fn finite_elements(lattice: &GraphLattice) -> impl Iterator<Item = &LatticeElement> {
    let d = lattice.diameter();
    lattice.levels()[..=d].iter().flatten()
}

fn all_ids(lattice: &GraphLattice) -> Vec<ElementId> {
    lattice
        .levels()
        .iter()
        .enumerate()
        .flat_map(|(level, l)| (0..l.len()).map(move |index| ElementId { level, index }))
        .collect()
}

fn atomic(lattice: &GraphLattice) -> Result<Option<String>> {
    for z in finite_elements(lattice).filter(|z| lattice.rank(z) >= 1) {
        let mut acc = lattice.bottom().clone();
        for tau in lattice.atoms().iter().filter(|t| lattice.leq(t, z)) {
            acc = lattice.join(&acc, tau);
        }
        if &acc != z {
            return fail("lattice.atomic", format!("join of atoms below {} is {}", show(z), show(&acc)));
        }
    }
    Ok(None)
}

fn rank_modularity(lattice: &GraphLattice) -> Result<Option<String>> {
    let elems: Vec<_> = finite_elements(lattice).collect();
    let mut pairs = 0usize;
    for u in &elems {
        for w in &elems {
            let join = lattice.join(u, w);
            if join.is_top() {
                continue;
            }
            pairs += 1;
            let meet = lattice.meet(u, w);
            if lattice.rank(u) + lattice.rank(w) != lattice.rank(&join) + lattice.rank(&meet) {
                return fail("lattice.rank_modularity", format!("fails for {} and {}", show(u), show(w)));
            }
        }
    }
    Ok(Some(format!("{pairs} pairs")))
}

fn cover_property(lattice: &GraphLattice) -> Result<Option<String>> {
    let d = lattice.diameter();
    let elems: Vec<_> = finite_elements(lattice).filter(|e| lattice.rank(e) < d).collect();
    for u in &elems {
        for w in &elems {
            if u == w {
                continue;
            }
            let join = lattice.join(u, w);
            let meet = lattice.meet(u, w);
            let join_covers = lattice.covers(&join, u) && lattice.covers(&join, w);
            let cover_meet = lattice.covers(u, &meet) && lattice.covers(w, &meet);
            if join_covers && !cover_meet {
                return fail(
                    "lattice.cover_property",
                    format!("{} and {} are covered by their join but do not cover their meet", show(u), show(w)),
                );
            }
            if !join.is_top() && cover_meet && !join_covers {
                return fail(
                    "lattice.cover_property",
                    format!("{} and {} cover their meet but their join does not cover them", show(u), show(w)),
                );
            }
        }
    }
    Ok(None)
}

fn atom_joins(lattice: &GraphLattice) -> Result<Option<String>> {
    let atoms = lattice.atoms();
    for (i, t) in atoms.iter().enumerate() {
        for s in &atoms[i + 1..] {
            let j = lattice.join(t, s);
            if !j.is_top() && lattice.rank(&j) != 2 {
                return fail("lattice.atom_joins", format!("{} ∨ {} has rank {}", show(t), show(s), lattice.rank(&j)));
            }
        }
    }
    Ok(None)
}

fn level_counts(lattice: &GraphLattice) -> Result<Option<String>> {
    let d = lattice.diameter();
    if lattice.vertex_count() != lattice.level(d).len() {
        return fail("counts.level_counts", "vertex count differs from top level size".into());
    }
    for j in 0..=d {
        for z in lattice.level(j) {
            for l in 0..=d {
                let brute = lattice
                    .level(l)
                    .iter()
                    .filter(|y| if l <= j { lattice.leq(y, z) } else { lattice.leq(z, y) })
                    .count();
                let closed = lattice.a_level_count(j as i64, l as i64);
                if closed != brute.into() {
                    return fail(
                        "counts.level_counts",
                        format!("a_{j}^{l} = {closed} but {} has {brute}", show(z)),
                    );
                }
            }
        }
    }
    Ok(None)
}

/// Breadth-first distances from the adjacency relation of each family's
/// definition, compared with `d - rank(x ∧ y)`.
fn distance_bfs(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let lattice = ctx.lattice();
    let verts = lattice.vertices();
    let nv = verts.len();
    let k = lattice.diameter();
    let adjacent = |x: &LatticeElement, y: &LatticeElement| match (x, y) {
        (LatticeElement::Subset(a), LatticeElement::Subset(b)) => a.iter().filter(|i| b.contains(i)).count() + 1 == k,
        (LatticeElement::Subspace(a), LatticeElement::Subspace(b)) => a.span_with(b).rows() == k + 1,
        (LatticeElement::SignedWord { plus: pa, minus: ma }, LatticeElement::SignedWord { plus: pb, minus: mb }) => {
            pa.iter().filter(|i| mb.contains(i)).count() + ma.iter().filter(|i| pb.contains(i)).count() == 1
        }
        _ => false,
    };
    let graph: Vec<Vec<usize>> = (0..nv)
        .map(|x| (0..nv).filter(|&y| adjacent(&verts[x], &verts[y])).collect())
        .collect();
    for s in 0..nv {
        let mut dist = vec![usize::MAX; nv];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &graph[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for t in 0..nv {
            if dist[t] != ctx.vertex_distance(s, t) {
                return fail(
                    "lattice.distance_bfs",
                    format!("vertices {s},{t}: graph distance {} vs lattice distance {}", dist[t], ctx.vertex_distance(s, t)),
                );
            }
        }
    }
    Ok(None)
}

fn iota_products(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let lattice = ctx.lattice();
    let ids = all_ids(lattice);
    for &z in &ids {
        let mz = ctx.iota_mask(z);
        let e = lattice.element(z);
        let all = mz.iter().all(|&b| b);
        let none = mz.iter().all(|&b| !b);
        if all != (z.level == 0) || none != e.is_top() {
            return fail("embedding.iota_products", format!("indicator of {} has the wrong extreme", show(e)));
        }
        let norm = mz.iter().filter(|&&b| b).count();
        if lattice.a(lattice.rank(e)) != norm.into() {
            return fail("embedding.iota_products", format!("|iota|^2 of {} is {norm}", show(e)));
        }
        for &y in &ids {
            let join = lattice.join(e, lattice.element(y));
            let mj = ctx.iota(&join);
            let prod = ctx.iota_id(z).hadamard(&ctx.iota_id(y));
            if prod != mj || ctx.iota_id(z).dot(&ctx.iota_id(y)) != mj.norm_sq() {
                return fail(
                    "embedding.iota_products",
                    format!("fails for {} and {}", show(e), show(lattice.element(y))),
                );
            }
        }
    }
    Ok(Some(format!("{} pairs", ids.len() * ids.len())))
}

fn star_identities(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let lattice = ctx.lattice();
    let family = lattice.family();
    let d = lattice.diameter();
    for j in 0..=d {
        let cj = Rational::from(constants::c(&family, j as i64));
        let down = Rational::from(lattice.a_level_count(j as i64, j as i64 - 1));
        for w in lattice.level(j) {
            let iota = ctx.iota(w);
            if ctx.star_upper(w) != iota.scaled(&cj) {
                return fail("embedding.star_identities", format!("upper star of {} is not c_{j} iota", show(w)));
            }
            if j >= 1 {
                let mut residual = ctx.star_lower(w);
                residual.axpy(&-&down, &iota);
                if residual != ctx.phi(w) {
                    return fail(
                        "embedding.star_identities",
                        format!("lower star of {} minus a_{j}^{} iota is not the meet indicator", show(w), j - 1),
                    );
                }
            }
        }
    }
    Ok(None)
}

fn vertex_lower_star(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let lattice = ctx.lattice();
    let d = lattice.diameter() as i64;
    let a = Rational::from(lattice.a_level_count(d, d - 1));
    for x in lattice.vertices() {
        let iota = ctx.iota(x);
        let mut expected = ctx.adjacency_apply(&iota)?;
        expected.axpy(&a, &iota);
        if ctx.star_lower(x) != expected {
            return fail("embedding.vertex_lower_star", format!("fails at vertex {}", show(x)));
        }
    }
    Ok(None)
}

/// `sum over u covering w of u_* = alpha_j iota_w + beta_j w_*` for `1 <= j < d`;
/// at `j = 0` the lower star of the bottom is empty and the identity reads
/// `sum over atoms of u_* = alpha_0 1`.
fn cover_sum_recursion(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let lattice = ctx.lattice();
    let family = lattice.family();
    let d = lattice.diameter();
    for j in 0..d {
        let alpha = Rational::from(constants::alpha(&family, j as i64));
        let beta = constants::beta(&family, j as i64).map(Rational::from);
        for w in lattice.level(j) {
            let mut lhs = FunctionVector::zeros(ctx.vertex_count());
            for u in lattice.upper_covers(w) {
                lhs.axpy(&Rational::one(), &ctx.star_lower(&u));
            }
            let mut rhs = ctx.iota(w).scaled(&alpha);
            if let Some(b) = &beta {
                rhs.axpy(b, &ctx.star_lower(w));
            }
            if lhs != rhs {
                return fail("embedding.cover_sum_recursion", format!("fails at level {j} for {}", show(w)));
            }
        }
    }
    Ok(Some("levels 0..d-1, level 0 with an empty lower star".into()))
}

fn filtration(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let d = ctx.diameter();
    let mut total = 0;
    for i in 0..=d {
        let vi = ctx.v_basis(i);
        total += vi.dim();
        if ctx.lambda_basis(i).dim() != total {
            return fail("filtration.nested", format!("dim Lambda_{i} differs from the sum of dim V_0..V_{i}"));
        }
        for j in i + 1..=d {
            for v in vi.vectors() {
                for w in ctx.v_basis(j).vectors() {
                    if !v.dot(w).is_zero() {
                        return fail("filtration.nested", format!("V_{i} and V_{j} are not orthogonal"));
                    }
                }
            }
        }
    }
    if total != ctx.vertex_count() {
        return fail("filtration.nested", format!("dimensions sum to {total}"));
    }
    let dims: Vec<String> = (0..=d).map(|j| ctx.lambda_basis(j).dim().to_string()).collect();
    Ok(Some(format!("dim Lambda ({})", dims.join(","))))
}

/// `A v - theta_j v` lies in `Lambda_{j-1}` for every basis vector `v` of `Lambda_j`.
fn adjacency_residual(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let thetas = ctx.thetas()?;
    for (j, theta) in thetas.iter().enumerate() {
        for (b, v) in ctx.lambda_basis(j).vectors().iter().enumerate() {
            let mut r = ctx.adjacency_apply(v)?;
            r.axpy(&-theta, v);
            let inside = if j == 0 {
                r.is_zero()
            } else {
                ctx.lambda_basis(j - 1).contains(&r)?
            };
            if !inside {
                return fail(
                    "filtration.adjacency_residual",
                    format!("A v - theta_{j} v is outside the previous filtration space for basis vector {b}"),
                );
            }
        }
    }
    Ok(None)
}

/// Deterministic rational test vectors.
fn probe_vectors(len: usize) -> Vec<FunctionVector> {
    (1..=3i64)
        .map(|s| {
            FunctionVector::new(
                (0..len as i64)
                    .map(|x| Rational::new((x * (2 * s + 5) + 3 * s) % 11 - 5, x % 3 + s))
                    .collect(),
            )
        })
        .collect()
}

fn adjacency_operator(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let nv = ctx.vertex_count();
    let d = ctx.diameter();
    let a1 = ctx.adjacency_matrix(1);
    if !a1.is_symmetric() {
        return fail("spectrum.adjacency_operator", "A_1 is not symmetric".into());
    }
    if ctx.adjacency_matrix(0) != crate::algebra::RationalMatrix::identity(nv) {
        return fail("spectrum.adjacency_operator", "A_0 is not the identity".into());
    }
    let mut sum = crate::algebra::RationalMatrix::zeros(nv, nv);
    for i in 0..=d {
        sum.add_scaled(&Rational::one(), &ctx.adjacency_matrix(i));
    }
    if sum != crate::algebra::RationalMatrix::from_fn(nv, nv, |_, _| Rational::one()) {
        return fail("spectrum.adjacency_operator", "distance matrices do not sum to the all-ones matrix".into());
    }
    let probes = probe_vectors(nv);
    for (p, f) in probes.iter().enumerate() {
        let af = ctx.adjacency_apply(f)?;
        if af != a1.mul_vec(f)? {
            return fail("spectrum.adjacency_operator", format!("operator and matrix differ on probe {p}"));
        }
        for g in &probes {
            if af.dot(g) != f.dot(&ctx.adjacency_apply(g)?) {
                return fail("spectrum.adjacency_operator", "operator is not self-adjoint".into());
            }
        }
    }
    Ok(None)
}

fn distance_regular(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let table = ctx.intersection_numbers()?;
    let valency = table[0][1][1];
    Ok(Some(format!("valency {valency}")))
}

fn u_matrix(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    for j in 0..=ctx.diameter() {
        let direct = ctx.u_matrix(j)?;
        if let Some((x, y)) = direct.first_difference(&ctx.u_matrix_from_distances(j)?) {
            return fail("frame.u_matrix", format!("U^{j} differs from the distance expansion at ({x},{y})"));
        }
    }
    Ok(None)
}

fn mu1_closed_form(ctx: &SpectralContext<'_>) -> Result<Option<String>> {
    let family = ctx.lattice().family();
    let mu = ctx.mu(1)?;
    for i in 0..=ctx.diameter() {
        let computed = ctx.p_eigenvalue(i, 1)?;
        let published = constants::p_i_one_formula(&family, i as i64);
        if computed != published {
            return fail("frame.mu1_closed_form", format!("p_{i}(1) is {computed}, formula gives {published}"));
        }
    }
    Ok(Some(format!("mu_1 = {mu}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnson_instance_passes() {
        let rep = verify_instance(Family::Johnson { n: 5, k: 2 }, &SuiteOptions::default()).unwrap();
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.first_failure());
        let names: Vec<_> = rep.checks.iter().map(|c| c.name).collect();
        assert!(names.contains(&"norton.associativity"));
        assert!(!names.contains(&"norton.sign_symmetry"));
    }

    #[test]
    fn hamming_instance_passes() {
        let rep = verify_instance(Family::Hamming { n: 3 }, &SuiteOptions::default()).unwrap();
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.first_failure());
        assert!(rep.checks.iter().any(|c| c.name == "norton.sign_symmetry"));
    }

    #[test]
    fn gates() {
        let opts = SuiteOptions::default();
        assert!(matches!(
            verify_instance(Family::Johnson { n: 3, k: 2 }, &opts),
            Err(Error::InvalidParameters(_))
        ));
        let tight = SuiteOptions {
            max_verify_vertices: 5,
            ..opts
        };
        assert!(matches!(verify_instance(Family::Johnson { n: 5, k: 2 }, &tight), Err(Error::SizeCap(_))));
        let rep = run_battery(&[Family::Hamming { n: 2 }, Family::Johnson { n: 5, k: 2 }], &tight).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.instances_skipped, 1);
        assert_eq!(rep.instances[1].status, Status::Skipped);
    }

    #[test]
    fn probes_are_deterministic_and_distinct() {
        let p = probe_vectors(6);
        assert_eq!(p, probe_vectors(6));
        assert_ne!(p[0], p[1]);
    }
}
