//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use drlattice::algebra::{FunctionVector, Rational};
use drlattice::lattice::{ElementId, Family, GraphLattice};
use drlattice::norton::{Norton, OffDiagonal};
use drlattice::spectral::{constants, SpectralContext};
use drlattice::suite::{self, SuiteOptions};

type Outcome = Result<String, String>;

fn johnson(n: u32, k: u32) -> Family {
    Family::Johnson { n, k }
}

fn hamming(n: u32) -> Family {
    Family::Hamming { n }
}

fn grassmann(n: u32, k: u32, q: u32) -> Family {
    Family::Grassmann { n, k, q }
}

fn r(s: &str) -> Rational {
    s.parse().expect("rational literal")
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

/// Eigenvalues and multiplicities, worked out by hand for each instance.
fn spectra() -> Vec<(Family, Vec<Rational>, Vec<usize>)> {
    vec![
        (johnson(5, 2), ints(&[6, 1, -2]), vec![1, 4, 5]),
        (johnson(6, 2), ints(&[8, 2, -2]), vec![1, 5, 9]),
        (johnson(7, 3), ints(&[12, 5, 0, -3]), vec![1, 6, 14, 14]),
        (hamming(2), ints(&[2, 0, -2]), vec![1, 2, 1]),
        (hamming(3), ints(&[3, 1, -1, -3]), vec![1, 3, 3, 1]),
        (hamming(4), ints(&[4, 2, 0, -2, -4]), vec![1, 4, 6, 4, 1]),
        (hamming(5), ints(&[5, 3, 1, -1, -3, -5]), vec![1, 5, 10, 10, 5, 1]),
        (grassmann(4, 2, 2), ints(&[18, 3, -3]), vec![1, 14, 20]),
        (grassmann(4, 2, 3), ints(&[48, 8, -4]), vec![1, 39, 90]),
    ]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs())
    })
}

fn eigenvalues() -> Outcome {
    let start = Instant::now();
    for (family, thetas, dims) in spectra() {
        let lattice = GraphLattice::build(family).map_err(err)?;
        let ctx = SpectralContext::new(&lattice).map_err(err)?;
        let formula: Vec<Rational> = (0..=lattice.diameter())
            .map(|j| Rational::from(constants::theta_closed_form(&family, j as i64)))
            .collect();
        ensure(formula == thetas, || format!("{family}: formula gives {formula:?}"))?;
        let oracle = ctx.eigen_oracle(&formula);
        let nullities: Vec<usize> = oracle.iter().map(|(_, m)| *m).collect();
        ensure(nullities == dims, || format!("{family}: oracle nullities {nullities:?}, expected {dims:?}"))?;
        ensure(nullities.iter().sum::<usize>() == ctx.vertex_count(), || {
            format!("{family}: multiplicities do not sum to {}", ctx.vertex_count())
        })?;
        let table = ctx.verify_eigenspaces().map_err(err)?;
        let verified: Vec<usize> = table.rows.iter().map(|row| row.dim).collect();
        ensure(verified == dims, || format!("{family}: V_j dimensions {verified:?}"))?;
    }
    within(start.elapsed(), Duration::from_secs(30), "eigenvalue battery")?;
    Ok(format!("9 instances in {:.1}s", start.elapsed().as_secs_f64()))
}

fn tight_frames() -> Outcome {
    let mut levels = 0;
    for (family, _, _) in spectra() {
        let lattice = GraphLattice::build(family).map_err(err)?;
        let ctx = SpectralContext::new(&lattice).map_err(err)?;
        for j in 0..=lattice.diameter() {
            let report = ctx.tight_frame_check(j).map_err(|e| format!("{family} j={j}: {e}"))?;
            ensure(report.tested >= report.dim, || format!("{family} j={j}: only {} vectors tested", report.tested))?;
            levels += 1;
        }
    }
    Ok(format!("{levels} levels over 9 instances"))
}

fn mu1() -> Outcome {
    for (family, expected) in [(johnson(5, 2), 3), (hamming(3), 4), (grassmann(4, 2, 2), 6)] {
        let lattice = GraphLattice::build(family).map_err(err)?;
        let ctx = SpectralContext::new(&lattice).map_err(err)?;
        let expected = Rational::from(expected);
        let closed = Rational::from(constants::mu1_closed_form(&family));
        ensure(closed == expected, || format!("{family}: closed form {closed}"))?;
        let expansion = ctx.mu(1).map_err(err)?;
        ensure(expansion == expected, || format!("{family}: expansion {expansion}"))?;
        for (i, v) in ctx.v_basis(1).vectors().iter().enumerate() {
            let image = ctx.u_apply(1, v).map_err(err)?;
            ensure(image == v.scaled(&expected), || format!("{family}: U^1 v != {expected} v on basis vector {i}"))?;
        }
    }
    Ok("J(5,2) 3, H(3) 4, J_2(4,2) 6".into())
}

fn norton() -> Outcome {
    let start = Instant::now();
    let cases = [
        (hamming(3), None),
        (hamming(4), None),
        (johnson(5, 2), Some((r("1/5"), OffDiagonal::PairSum { coefficient: r("-1/15") }))),
        (johnson(6, 2), Some((r("1/3"), OffDiagonal::PairSum { coefficient: r("-1/12") }))),
        (
            grassmann(4, 2, 2),
            Some((
                r("3/5"),
                OffDiagonal::PairSumAndJoin {
                    pair: r("-1/5"),
                    join: r("1/6"),
                },
            )),
        ),
    ];
    let mut pairs = 0;
    for (family, coefficients) in cases {
        let lattice = GraphLattice::build(family).map_err(err)?;
        let ctx = SpectralContext::new(&lattice).map_err(err)?;
        let report = Norton::new(&ctx).and_then(|n| n.verify()).map_err(err)?;
        ensure(report.verified, || format!("{family}: verification failed: {:?}", report.counterexample))?;
        ensure(report.pairs_verified == report.atoms * report.atoms, || {
            format!("{family}: {}/{} pairs", report.pairs_verified, report.atoms * report.atoms)
        })?;
        match coefficients {
            None => ensure(report.all_zero, || format!("{family}: some product is nonzero"))?,
            Some((diag, off)) => {
                ensure(report.diagonal == diag, || format!("{family}: diagonal {}", report.diagonal))?;
                ensure(report.off_diagonal == off, || format!("{family}: off-diagonal {:?}", report.off_diagonal))?;
            }
        }
        pairs += report.pairs_verified;
    }
    within(start.elapsed(), Duration::from_secs(60), "Norton battery")?;
    Ok(format!("{pairs} atom pairs in {:.1}s", start.elapsed().as_secs_f64()))
}

const STRUCTURAL: [&str; 11] = [
    "lattice.atomic",
    "lattice.rank_modularity",
    "lattice.cover_property",
    "lattice.atom_joins",
    "counts.level_counts",
    "embedding.iota_products",
    "embedding.star_identities",
    "embedding.vertex_lower_star",
    "embedding.cover_sum_recursion",
    "filtration.nested",
    "filtration.adjacency_residual",
];

fn structural() -> Outcome {
    let options = SuiteOptions::default();
    let mut run = 0;
    let mut skipped = Vec::new();
    for family in suite::battery() {
        let report = match suite::verify_instance(family, &options) {
            Ok(report) => report,
            Err(drlattice::Error::SizeCap(_)) => {
                skipped.push(family.to_string());
                continue;
            }
            Err(e) => return Err(format!("{family}: {e}")),
        };
        for name in STRUCTURAL {
            let check = report.checks.iter().find(|c| c.name == name);
            ensure(check.is_some_and(|c| c.status == suite::Status::Pass), || {
                format!("{family} {name}: {:?}", check.and_then(|c| c.detail.clone()))
            })?;
        }
        run += 1;
    }
    let mut msg = format!("{} identities on {run} instances", STRUCTURAL.len());
    if !skipped.is_empty() {
        msg += &format!("; over the verification size cap: {}", skipped.join(", "));
    }
    Ok(msg)
}

fn unit(n: usize, i: usize) -> FunctionVector {
    FunctionVector::from_integers((0..n).map(|x| i64::from(x == i)))
}

fn cross_oracles() -> Outcome {
    let options = SuiteOptions::default();
    let mut compared = 0;
    for family in suite::battery() {
        let lattice = GraphLattice::build(family).map_err(err)?;
        if lattice.vertex_count() > options.max_verify_vertices {
            continue;
        }
        let ctx = SpectralContext::new(&lattice).map_err(err)?;
        let nv = ctx.vertex_count();
        let d = lattice.diameter();

        let a1 = ctx.adjacency_matrix(1);
        let probe = FunctionVector::from_integers((0..nv as i64).map(|x| (x * x) % 7 - 3));
        for (i, f) in (0..nv).map(|i| unit(nv, i)).chain([probe]).enumerate() {
            let fast = ctx.adjacency_apply(&f).map_err(err)?;
            ensure(fast == a1.mul_vec(&f).map_err(err)?, || format!("{family}: adjacency differs on probe {i}"))?;
        }

        for j in 0..=d {
            let direct = ctx.u_matrix(j).map_err(err)?;
            let combined = ctx.u_matrix_from_distances(j).map_err(err)?;
            ensure(direct == combined, || {
                format!("{family}: U^{j} differs at {:?}", direct.first_difference(&combined))
            })?;
        }

        let nor = Norton::new(&ctx).map_err(err)?;
        for x in 0..nv {
            let iota = ctx.iota_id(ElementId { level: d, index: x });
            let frame = nor.pi1_frame(&iota).map_err(err)?;
            ensure(frame == ctx.pi(1, &iota).map_err(err)?, || format!("{family}: projections differ on vertex {x}"))?;
        }
        compared += 1;
    }
    Ok(format!("3 oracle pairs on {compared} instances"))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_drlattice"))
            .args(["verify", "--all", "--format", "json"])
            .env_remove("DRLATTICE_MAX_VERTICES")
            .env_remove("DRLATTICE_MAX_VERIFY_VERTICES")
            .output()
            .map_err(err)
    };
    let (first, second) = (run()?, run()?);
    ensure(first.status.success(), || format!("first run exited with {}", first.status))?;
    ensure(second.status.success(), || format!("second run exited with {}", second.status))?;
    ensure(!first.stdout.is_empty(), || "empty output".into())?;
    ensure(first.stdout == second.stdout, || "outputs differ between runs".into())?;
    Ok(format!("{} identical bytes", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("eigenvalue closed forms match the nullspace oracle", eigenvalues),
        ("tight-frame identity on every eigenspace", tight_frames),
        ("mu_1 closed form, expansion and U^1 eigenvalue agree", mu1),
        ("Norton products match their closed forms", norton),
        ("structural identities hold exhaustively", structural),
        ("independent oracles agree", cross_oracles),
        ("verify --all output is deterministic", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
