//! Acceptance run: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use birational_rowmotion::algebra::{family_weight, random_labeling, Labeling, Rational, Tropical};
use birational_rowmotion::counting::{
    lattice_points_polygonal, macmahon, pp_bijection, BijectionDirection, EhrhartTable, PlanePartition,
    LATTICE_BOUND,
};
use birational_rowmotion::poset::{ChainFamily, GridPoset};
use birational_rowmotion::report::VerificationReport;
use birational_rowmotion::rowmotion::{antichain_rowmotion, polygonal_rowmotion, rowmotion};
use birational_rowmotion::verify::{reference, run_suite, Suite, SuiteParams};
use birational_rowmotion::zeta::{intermediate_poset, zeta, zeta_k, ZetaDirection};
use birational_rowmotion::Result;
use num_bigint::BigInt;

const SEEDS: std::ops::RangeInclusive<u64> = 1..=10;

fn pairs(max: u32, r_ge_s: bool) -> Vec<(u32, u32)> {
    (1..=max).flat_map(|r| (1..=max).map(move |s| (r, s))).filter(|&(r, s)| !r_ge_s || r >= s).collect()
}

fn arc(p: GridPoset) -> Arc<GridPoset> {
    Arc::new(p)
}

fn periodicity_rectangle() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    for (r, s) in pairs(4, false) {
        let p = arc(GridPoset::rectangle(r, s)?);
        for seed in SEEDS {
            let x = random_labeling::<Rational>(&p, seed);
            rep.record(format!("R({r},{s}) seed {seed}"), rowmotion(&x, (r + s) as i64) == x, "");
        }
    }
    Ok(rep)
}

fn periodicity_trapezoid() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    for (r, s) in pairs(4, true) {
        let p = arc(GridPoset::trapezoid(r, s)?);
        for seed in SEEDS {
            let x = random_labeling::<Rational>(&p, seed);
            rep.record(format!("T({r},{s}) seed {seed}"), antichain_rowmotion(&x, (r + s) as i64) == x, "");
        }
    }
    for k in 1..=4 {
        let p = arc(intermediate_poset(4, 4, k)?);
        for seed in SEEDS {
            let x = random_labeling::<Rational>(&p, seed);
            rep.record(format!("I(4,4,{k}) seed {seed}"), polygonal_rowmotion(&x, 8)? == x, "");
        }
    }
    Ok(rep)
}

fn equivariance() -> Result<VerificationReport> {
    let params = SuiteParams { seeds: SEEDS.collect(), ..SuiteParams::default() };
    let mut rep = run_suite(Suite::Equivariance, &params)?;
    rep.checks.retain(|c| !c.name.contains("weight") && !c.name.contains("round trip"));
    Ok(rep)
}

fn weight_preservation() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    for (r, s) in pairs(4, true) {
        let t = arc(GridPoset::trapezoid(r, s)?);
        for seed in SEEDS {
            let x = random_labeling::<Rational>(&t, seed);
            let z = zeta(&x, ZetaDirection::Forward)?;
            let (a, b) = (family_weight(&x, &ChainFamily::maximal()), family_weight(&z, &ChainFamily::maximal()));
            rep.record(format!("maximal chains T({r},{s}) seed {seed}"), a == b, "");
            for k in 1..s {
                let x = random_labeling::<Rational>(&arc(intermediate_poset(r, s, k + 1)?), seed);
                let z = zeta_k(&x, k)?;
                let (a, b) = (family_weight(&x, &ChainFamily::polygonal()), family_weight(&z, &ChainFamily::polygonal()));
                rep.record(format!("polygonal chains k={k} ({r},{s}) seed {seed}"), a == b, "");
            }
        }
    }
    Ok(rep)
}

fn aleph() -> Result<VerificationReport> {
    run_suite(Suite::Aleph, &SuiteParams { shapes: 10, max_cells: 14, ..SuiteParams::default() })
}

fn chain_shifting() -> Result<VerificationReport> {
    run_suite(Suite::ChainShift, &SuiteParams { seeds: (1..=5).collect(), max_cells: 12, ..SuiteParams::default() })
}

fn transfer_identities() -> Result<VerificationReport> {
    run_suite(Suite::TransferIdentities, &SuiteParams { dims: Some((4, 4)), seeds: SEEDS.collect(), ..SuiteParams::default() })
}

fn plane_partitions() -> Result<VerificationReport> {
    let mut rep = run_suite(Suite::Bijection, &SuiteParams { max_height: 3, ..SuiteParams::default() })?;
    rep.record("N(2,2,2) = 20", macmahon(2, 2, 2) == BigInt::from(20), "");
    Ok(rep)
}

fn load<A: birational_rowmotion::algebra::Semifield>(p: GridPoset, data: &str) -> Result<Labeling<A>> {
    Labeling::parse(arc(p), &reference::to_text(data))
}

fn golden() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    let x: Labeling<Tropical> = load(GridPoset::trapezoid(5, 4)?, reference::T54_INPUT)?;
    let steps = [
        (3, load::<Tropical>(GridPoset::intermediate(5, 4, 3)?, reference::T54_AFTER_3)?),
        (2, load::<Tropical>(GridPoset::intermediate(5, 4, 2)?, reference::T54_AFTER_2)?),
        (1, load::<Tropical>(GridPoset::rectangle(5, 4)?, reference::R54_OUTPUT)?),
    ];
    let mut cur = x.clone();
    for (k, expected) in &steps {
        cur = zeta_k(&cur, *k)?;
        rep.record(format!("tropical zeta_{k}"), cur == *expected, "");
    }
    rep.record("tropical zeta composite", zeta(&x, ZetaDirection::Forward)? == steps[2].1, "");
    let t = PlanePartition::parse(arc(GridPoset::trapezoid(5, 4)?), &reference::to_text(reference::PP_T54))?;
    let r = PlanePartition::parse(arc(GridPoset::rectangle(5, 4)?), &reference::to_text(reference::PP_R54))?;
    rep.record("plane partition t2r", pp_bijection(&t, BijectionDirection::T2R)? == r, "");
    rep.record("plane partition r2t", pp_bijection(&r, BijectionDirection::R2T)? == t, "");
    rep.record("heights", t.height() == 4 && r.height() == 4, format!("{} {}", t.height(), r.height()));
    Ok(rep)
}

fn ehrhart() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    let table = EhrhartTable::compute(4, 4, 3, LATTICE_BOUND)?;
    rep.record("rows agree for k = 1..4", table.rows_agree(), table.to_string().replace('\n', "; "));
    rep.record("rows equal N(4,4,l)", table.matches_macmahon(), "");
    rep.record("N(4,4,1) = 70", macmahon(4, 4, 1) == BigInt::from(70) && lattice_points_polygonal(4, 4, 1, 1)? == 70, "");
    Ok(rep)
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Result<VerificationReport>);
    let criteria: [Criterion; 10] = [
        (1, "periodicity on rectangles", periodicity_rectangle),
        (2, "periodicity on trapezoids and intermediate posets", periodicity_trapezoid),
        (3, "equivariance of each step and of the composite", equivariance),
        (4, "chain weight preservation", weight_preservation),
        (5, "arborescence bijection", aleph),
        (6, "chain-shifting lemmas", chain_shifting),
        (7, "transfer and partial-transfer identities", transfer_identities),
        (8, "plane-partition bijection", plane_partitions),
        (9, "reference arrays", golden),
        (10, "lattice-point counts across intermediate posets", ehrhart),
    ];
    let mut all = true;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(rep) => {
                let failures: Vec<String> = rep.failures().take(3).map(|c| format!("{}: {}", c.name, c.detail)).collect();
                (rep.all_passed() && !rep.checks.is_empty(), format!("{} checks {}", rep.checks.len(), failures.join("; ")))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n} ({name}): {} [{:.1?}]", detail.trim_end(), start.elapsed());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
