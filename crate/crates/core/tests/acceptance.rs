//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mfkit::catalog::{CatalogKind, CurvePoint, Fixture, WeierstrassCurve};
use mfkit::hom::{duality_image, is_stably_isomorphic, picard_tensor, stable_hom_basis};
use mfkit::mf::{extract_mf, ExtractMode, MatrixFactorization};
use mfkit::resolution::Presentation;
use mfkit::FieldSpec;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rational_curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints(FieldSpec::Rationals, 0, 1).unwrap()
}

fn prime_curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints(FieldSpec::Prime(101), 0, 1).unwrap()
}

/// `(-1,0), (0,±1), (2,±3)`.
fn rational_points(c: &WeierstrassCurve) -> Vec<CurvePoint> {
    c.integral_points(3)
}

fn iso(m: &MatrixFactorization, n: &MatrixFactorization, what: &str) -> Result<(), String> {
    let out = lift(is_stably_isomorphic(m, n, 7))?;
    ensure!(out.is_iso(), "{what}: no isomorphism ({out:?})");
    Ok(())
}

fn factorisation_identities() -> Check {
    let start = Instant::now();
    let c = prime_curve();
    let pts = c.affine_points().unwrap();
    ensure!(!pts.is_empty(), "no affine points over F_101");
    let mut count = 0;
    for k in WeierstrassCurve::all_kinds(&pts) {
        let m = lift(c.catalog_mf(&k))?;
        let r = m.verify();
        ensure!(r.is_valid(), "{k:?}: {r}");
        count += 1;
    }
    let fm = lift(c.fundamental_module_mf())?;
    ensure!(fm.is_valid(), "fundamental module: {}", fm.verify());
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("{} points, {} factorisations, {elapsed:.2?}", pts.len(), count + 1))
}

fn resolution_goldens() -> Check {
    let c = rational_curve();
    let res = lift(c.residue_field().minimal_resolution(4))?;
    let want: Vec<Vec<i64>> = vec![
        vec![0],
        vec![1, 1, 1],
        vec![2, 2, 2, 3],
        vec![3, 4, 4, 4],
        vec![5, 5, 5, 6],
    ];
    ensure!(res.twists() == want, "twists {:?}", res.twists());
    ensure!(lift(res.is_complex())?, "not a complex");
    let tail = res.periodic_tail.clone().ok_or("no periodic tail")?;
    let pair = lift(MatrixFactorization::new(
        c.ring.clone(),
        c.f.clone(),
        tail.alpha,
        tail.beta,
    ))?;
    ensure!(pair.is_valid(), "periodic pair: {}", pair.verify());
    iso(&pair, &lift(c.catalog_mf(&CatalogKind::StructureSheaf))?, "periodic pair vs Φ(O)")?;
    Ok(format!("twists match, periodic from d^{}", tail.start))
}

fn hilbert_identity() -> Check {
    let c = rational_curve();
    let res = lift(c.residue_field().minimal_resolution(3))?;
    let syz = lift(Presentation::new(
        c.ring.clone(),
        res.over.clone(),
        res.maps[2].clone(),
    ))?;
    for i in 2..=10i64 {
        let h = lift(syz.hilbert_function(i))? as i64;
        ensure!(h == 6 * i - 9, "HF({i}) = {h}");
    }
    Ok("HF(syz(X,Y,Z), i) = 6i-9 for i = 2..10".into())
}

fn pipeline_agreement() -> Check {
    let mut n = 0;
    for c in [rational_curve(), prime_curve()] {
        let pts: Vec<CurvePoint> = match c.field() {
            FieldSpec::Rationals => rational_points(&c),
            _ => c.affine_points().unwrap().into_iter().step_by(7).take(5).collect(),
        };
        ensure!(pts.len() >= 5, "only {} points over {}", pts.len(), c.field());
        for p in &pts {
            let extracted = lift(extract_mf(&lift(c.point_module(p))?, ExtractMode::Point))?;
            let formula = lift(c.catalog_mf(&CatalogKind::Point(p.clone())))?;
            iso(&extracted, &formula, &format!("point {p} over {}", c.field()))?;
            n += 1;
        }
        let o = lift(extract_mf(&c.residue_field(), ExtractMode::StructureSheaf))?;
        iso(&o, &lift(c.catalog_mf(&CatalogKind::StructureSheaf))?, "structure sheaf")?;
    }
    Ok(format!("{n} points plus Φ(O) over QQ and F_101"))
}

fn cone_goldens() -> Check {
    let c = rational_curve();
    let p = lift(c.point(2, 3))?;
    let cases = [
        (Fixture::MinusEToPoint(p.clone()), CatalogKind::LBePlusP(p.clone()), 2),
        (Fixture::MinusEToE, CatalogKind::LB2e, 2),
        (Fixture::Minus2eToPoint(p.clone()), CatalogKind::LB2ePlusP(p.clone()), 3),
    ];
    for (fx, kind, rank) in cases {
        let phi = lift(c.fixture_morphism(fx.clone()))?;
        let cone = lift(phi.cone())?;
        ensure!(cone.is_valid(), "{fx:?}: cone invalid");
        let red = cone.reduce();
        ensure!(red.rank() == rank, "{fx:?}: reduced rank {}", red.rank());
        iso(&red, &lift(c.catalog_mf(&kind))?.shift(1), &format!("{fx:?}"))?;
    }
    Ok("e+p, 2e and 2e+p cones match".into())
}

fn duality() -> Check {
    let c = rational_curve();
    let o = lift(c.catalog_mf(&CatalogKind::StructureSheaf))?;
    let pts = [lift(c.point(0, 1))?, lift(c.point(2, 3))?, CurvePoint::Infinity];
    for p in &pts {
        let k = lift(c.point_mf(p))?;
        let d = lift(duality_image(&o, &k))?;
        iso(&d, &k.shift(-1), &format!("D(κ({p}))"))?;
    }
    let d = lift(duality_image(&o, &o))?;
    iso(&d, &o, "D(O)")?;
    Ok(format!("{} points and O", pts.len()))
}

fn picard_invertibility() -> Check {
    let c = rational_curve();
    let o = lift(c.catalog_mf(&CatalogKind::StructureSheaf))?;
    let pts = rational_points(&c);
    let mut n = 0;
    for k in WeierstrassCurve::all_kinds(&pts) {
        let x = lift(c.catalog_mf(&k))?;
        ensure!(x.shift(2) == x.twist(3), "{k:?}: [2] != (3)");
        ensure!(x.shift(1).shift(1) == x.twist(3), "{k:?}: [1][1] != (3)");
        let down = lift(picard_tensor(&o, &x, -1))?;
        let back = lift(picard_tensor(&o, &down, 1))?;
        iso(&back, &x, &format!("{k:?}"))?;
        n += 1;
    }
    Ok(format!("{n} catalog objects"))
}

fn non_isomorphism() -> Check {
    let c = rational_curve();
    let pts = rational_points(&c);
    let mut pairs = 0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let mp = lift(c.point_mf(p))?;
            let mq = lift(c.point_mf(q))?;
            for s in -3..=3 {
                let h = lift(stable_hom_basis(&mp, &mq, s))?;
                ensure!(h.stable_dim == 0, "Hom(κ({p})[{s}], κ({q})) = {}", h.stable_dim);
            }
            let out = lift(is_stably_isomorphic(&mp, &mq, 7))?;
            ensure!(out.is_refuted(), "{p} vs {q}: {out:?}");
            pairs += 1;
        }
    }
    ensure!(pairs >= 10, "only {pairs} pairs");
    let o = lift(c.catalog_mf(&CatalogKind::StructureSheaf))?;
    for k in WeierstrassCurve::all_kinds(&pts) {
        if k == CatalogKind::Trivial {
            continue;
        }
        let x = lift(c.catalog_mf(&k))?;
        let mut nonzero = Vec::new();
        for i in -3..=3 {
            if lift(stable_hom_basis(&o, &x, i))?.stable_dim > 0 {
                nonzero.push(i);
            }
        }
        let consecutive = nonzero.windows(2).all(|w| w[1] == w[0] + 1);
        ensure!(
            !nonzero.is_empty() && nonzero.len() <= 2 && consecutive,
            "{k:?}: nonzero shifts {nonzero:?}"
        );
    }
    Ok(format!("{pairs} pairs refuted, shift bound holds"))
}

fn size_bound() -> Check {
    let c = rational_curve();
    let pts = [lift(c.point(0, 1))?, lift(c.point(2, 3))?, lift(c.point(-1, 0))?];
    let mut ranks = Vec::new();
    for p in &pts {
        let r = lift(c.size_bound_check(p))?;
        ensure!(r.cone.is_valid(), "cone for {p} invalid");
        ensure!(r.within_bound && r.at_least_four, "{p}: rank {}", r.rank);
        ranks.push(r.rank);
    }
    Ok(format!("reduced ranks {ranks:?}"))
}

fn ar_middle() -> Check {
    let c = rational_curve();
    let p = lift(c.point(2, 3))?;
    let cases = [
        ("point", lift(c.catalog_mf(&CatalogKind::Point(p)))?),
        ("fundamental", lift(c.fundamental_module_mf())?),
    ];
    for (name, m) in cases {
        let module = lift(m.reduce().cokernel_module())?;
        let mid = lift(c.ar_middle(&m))?;
        for i in -4..=10 {
            let lhs = lift(mid.hilbert_function(i))?;
            let rhs = 2 * lift(module.hilbert_function(i))?;
            ensure!(lhs == rhs, "{name}: HF({i}) = {lhs}, want {rhs}");
        }
    }
    Ok("point and fundamental module".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("factorisation identities over F_101", factorisation_identities),
        ("resolution of the residue field", resolution_goldens),
        ("Hilbert function of the first syzygy", hilbert_identity),
        ("extraction agrees with the formulas", pipeline_agreement),
        ("cone goldens", cone_goldens),
        ("duality", duality),
        ("Picard invertibility and [2] = (3)", picard_invertibility),
        ("non-isomorphism and shift bound", non_isomorphism),
        ("size bound for O(-3e-p)", size_bound),
        ("AR middle term doubles HF", ar_middle),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run)
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panic: {msg}"))
            });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
