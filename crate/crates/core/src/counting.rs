//! Plane partitions, MacMahon's box formula, the height-preserving bijection
//! between trapezoid and rectangle, and lattice points of polygonal chain polytopes.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{chain_weight, Labeling, Semifield, Tropical};
use crate::error::{Error, Result};
use crate::poset::{ChainFamily, GridPoset, PosetKind};
use crate::report::VerificationReport;
use crate::rowmotion::{transfer, TransferDirection};
use crate::zeta::{intermediate_poset, zeta, zeta_k, zeta_k_inverse, ZetaDirection};

/// Number of plane partitions in an `r × s` box with entries at most `ℓ`.
pub fn macmahon(r: u32, s: u32, l: u32) -> BigInt {
    let mut acc = BigRational::one();
    for i in 1..=r {
        for j in 1..=s {
            for k in 1..=l {
                let n = BigInt::from(i + j + k - 1);
                let d = BigInt::from(i + j + k - 2);
                acc *= BigRational::new(n, d);
            }
        }
    }
    assert!(acc.is_integer(), "box product is integral");
    acc.to_integer()
}

/// Order-preserving labeling by nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePartition {
    poset: Arc<GridPoset>,
    values: Vec<u32>,
}

impl PlanePartition {
    pub fn new(poset: Arc<GridPoset>, values: Vec<u32>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::InvalidPartition(format!("{} values for {} elements", values.len(), poset.len())));
        }
        for idx in 0..poset.len() {
            for &up in poset.upper_covers(idx) {
                if values[idx] > values[up] {
                    return Err(Error::InvalidPartition(format!(
                        "{} at {} exceeds {} at {}",
                        values[idx],
                        poset.element(idx),
                        values[up],
                        poset.element(up)
                    )));
                }
            }
        }
        Ok(PlanePartition { poset, values })
    }

    pub fn zeros(poset: Arc<GridPoset>) -> Self {
        let n = poset.len();
        PlanePartition { poset, values: vec![0; n] }
    }

    pub fn poset(&self) -> &Arc<GridPoset> {
        &self.poset
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Maximum label (zero on the empty poset).
    pub fn height(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn to_labeling(&self) -> Labeling<Tropical> {
        let values = self.values.iter().map(|&v| Tropical::from_integer(v as i64)).collect();
        Labeling::new(self.poset.clone(), values).expect("length matches")
    }

    pub fn from_labeling(x: &Labeling<Tropical>) -> Result<Self> {
        let values = x
            .iter()
            .map(|(e, v)| {
                v.to_integer()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| Error::InvalidPartition(format!("label {v} at {e} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        PlanePartition::new(x.poset().clone(), values)
    }

    pub fn to_text(&self) -> String {
        self.to_labeling().to_text()
    }

    pub fn parse(poset: Arc<GridPoset>, text: &str) -> Result<Self> {
        Self::from_labeling(&Labeling::parse(poset, text)?)
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Refusal thresholds for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_cells: usize,
    pub max_height: u32,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds { max_cells: 16, max_height: 4 }
    }
}

impl EnumerationBounds {
    fn check(&self, cells: usize, height: u32) -> Result<()> {
        if cells > self.max_cells || height > self.max_height {
            return Err(Error::TooLarge(format!(
                "{cells} cells at height {height} exceeds bounds ({} cells, height {})",
                self.max_cells, self.max_height
            )));
        }
        Ok(())
    }
}

pub fn enumerate_plane_partitions(poset: &Arc<GridPoset>, l: u32) -> Result<Vec<PlanePartition>> {
    enumerate_plane_partitions_bounded(poset, l, EnumerationBounds::default())
}

/// All plane partitions with entries in `[0, ℓ]`, in lexicographic order of
/// their canonical-order value vectors.
pub fn enumerate_plane_partitions_bounded(
    poset: &Arc<GridPoset>,
    l: u32,
    bounds: EnumerationBounds,
) -> Result<Vec<PlanePartition>> {
    bounds.check(poset.len(), l)?;
    let mut out = Vec::new();
    let mut values = vec![0u32; poset.len()];
    fill_pp(poset, l, 0, &mut values, &mut out);
    Ok(out)
}

fn fill_pp(poset: &Arc<GridPoset>, l: u32, idx: usize, values: &mut Vec<u32>, out: &mut Vec<PlanePartition>) {
    if idx == values.len() {
        out.push(PlanePartition { poset: poset.clone(), values: values.clone() });
        return;
    }
    let lo = poset.lower_covers(idx).iter().map(|&q| values[q]).max().unwrap_or(0);
    for v in lo..=l {
        values[idx] = v;
        fill_pp(poset, l, idx + 1, values, out);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BijectionDirection {
    T2R,
    R2T,
}

impl std::str::FromStr for BijectionDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t2r" => Ok(BijectionDirection::T2R),
            "r2t" => Ok(BijectionDirection::R2T),
            other => Err(Error::Parse { line: 0, message: format!("unknown direction `{other}`") }),
        }
    }
}

/// `ψ ∘ ζ ∘ ψ⁻¹` in the tropical algebra (or its inverse).
pub fn pp_bijection(x: &PlanePartition, direction: BijectionDirection) -> Result<PlanePartition> {
    let kind = x.poset().kind();
    let ok = matches!(
        (direction, kind),
        (BijectionDirection::T2R, PosetKind::Trapezoid { .. }) | (BijectionDirection::R2T, PosetKind::Rectangle { .. })
    );
    if !ok {
        return Err(Error::InvalidPartition(format!("{kind} is not the domain of {direction:?}")));
    }
    PlanePartition::new(x.poset().clone(), x.values().to_vec())?;
    let chain_point = transfer(&x.to_labeling(), TransferDirection::PsiInv);
    let mapped = match direction {
        BijectionDirection::T2R => zeta(&chain_point, ZetaDirection::Forward)?,
        BijectionDirection::R2T => zeta(&chain_point, ZetaDirection::Inverse)?,
    };
    PlanePartition::from_labeling(&transfer(&mapped, TransferDirection::Psi))
}

/// Per-cell lists of the polygonal chains through it, as indices.
fn chain_incidence(poset: &GridPoset) -> Vec<Vec<usize>> {
    let mut through = vec![Vec::new(); poset.len()];
    for (c, chain) in poset.enumerate_chains(&ChainFamily::polygonal()).iter().enumerate() {
        for &e in chain.elements() {
            through[poset.index_of(e).expect("chain lies in the poset")].push(c);
        }
    }
    through
}

fn chain_count(through: &[Vec<usize>]) -> usize {
    through.iter().flatten().max().map_or(0, |&m| m + 1)
}

/// Default ceiling on `|I_k| · ℓ` for lattice-point counting.
pub const LATTICE_BOUND: usize = 80;

pub fn lattice_points_polygonal(r: u32, s: u32, k: u32, l: u32) -> Result<u64> {
    lattice_points_polygonal_bounded(r, s, k, l, LATTICE_BOUND)
}

/// Number of integer points `x ≥ 0` with every polygonal-chain sum at most `ℓ`.
pub fn lattice_points_polygonal_bounded(r: u32, s: u32, k: u32, l: u32, bound: usize) -> Result<u64> {
    let poset = intermediate_poset(r, s, k)?;
    if poset.len() * l as usize > bound {
        return Err(Error::TooLarge(format!("{} cells at dilation {l} exceeds bound {bound}", poset.len())));
    }
    let through = chain_incidence(&poset);
    let mut sums = vec![0u32; chain_count(&through)];
    Ok(count_points(&through, l, 0, &mut sums))
}

fn count_points(through: &[Vec<usize>], l: u32, idx: usize, sums: &mut [u32]) -> u64 {
    if idx == through.len() {
        return 1;
    }
    let used = through[idx].iter().map(|&c| sums[c]).max().unwrap_or(0);
    let mut total = 0;
    for v in 0..=l - used {
        for &c in &through[idx] {
            sums[c] += v;
        }
        total += count_points(through, l, idx + 1, sums);
        for &c in &through[idx] {
            sums[c] -= v;
        }
    }
    total
}

/// All integer points of the `ℓ`-dilated polygonal chain polytope of `I_k`.
pub fn enumerate_polygonal_points(r: u32, s: u32, k: u32, l: u32, bound: usize) -> Result<Vec<Labeling<Tropical>>> {
    let poset = Arc::new(intermediate_poset(r, s, k)?);
    if poset.len() * l as usize > bound {
        return Err(Error::TooLarge(format!("{} cells at dilation {l} exceeds bound {bound}", poset.len())));
    }
    let through = chain_incidence(&poset);
    let mut out = Vec::new();
    let mut values = vec![0u32; poset.len()];
    fill_points(&poset, &through, l, 0, &mut vec![0; chain_count(&through)], &mut values, &mut out);
    Ok(out)
}

fn fill_points(
    poset: &Arc<GridPoset>,
    through: &[Vec<usize>],
    l: u32,
    idx: usize,
    sums: &mut Vec<u32>,
    values: &mut Vec<u32>,
    out: &mut Vec<Labeling<Tropical>>,
) {
    if idx == through.len() {
        let v = values.iter().map(|&n| Tropical::from_integer(n as i64)).collect();
        out.push(Labeling::new(poset.clone(), v).expect("length matches"));
        return;
    }
    let used = through[idx].iter().map(|&c| sums[c]).max().unwrap_or(0);
    for v in 0..=l - used {
        values[idx] = v;
        for &c in &through[idx] {
            sums[c] += v;
        }
        fill_points(poset, through, l, idx + 1, sums, values, out);
        for &c in &through[idx] {
            sums[c] -= v;
        }
    }
}

/// Whether `x` is an integer point of the `ℓ`-dilated polygonal chain polytope.
pub fn in_polygonal_polytope(x: &Labeling<Tropical>, l: u32) -> Result<bool> {
    let poset = x.poset();
    if poset.polygonal_anchor().is_none() {
        return Err(Error::WrongKind { expected: "intermediate".into(), found: poset.kind().to_string() });
    }
    if !is_lattice_point(x) {
        return Ok(false);
    }
    let bound = Tropical::from_integer(l as i64);
    Ok(poset
        .enumerate_chains(&ChainFamily::polygonal())
        .iter()
        .all(|c| chain_weight(x, c) <= bound))
}

/// Tropical `ζ_k` and `ζ_k⁻¹` carry lattice points of one dilated polytope into the other.
pub fn verify_polytope_map(r: u32, s: u32, k: u32, l: u32, bound: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let upper = enumerate_polygonal_points(r, s, k + 1, l, bound)?;
    let lower = enumerate_polygonal_points(r, s, k, l, bound)?;
    let mut fwd_ok = true;
    for x in &upper {
        fwd_ok &= in_polygonal_polytope(&zeta_k(x, k)?, l)?;
    }
    let mut inv_ok = true;
    for z in &lower {
        inv_ok &= in_polygonal_polytope(&zeta_k_inverse(z, k)?, l)?;
    }
    let tag = format!("r={r} s={s} k={k} l={l}");
    report.record(format!("polytope forward {tag}"), fwd_ok, format!("{} points", upper.len()));
    report.record(format!("polytope inverse {tag}"), inv_ok, format!("{} points", lower.len()));
    report.record(
        format!("polytope counts {tag}"),
        upper.len() == lower.len(),
        format!("{} = {}", upper.len(), lower.len()),
    );
    Ok(report)
}

/// Lattice-point counts of `ℓ·C̃(I_k)` for `k = 1..=s` and `ℓ = 0..=max_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartTable {
    pub r: u32,
    pub s: u32,
    /// `rows[k-1][ℓ]`.
    pub rows: Vec<Vec<u64>>,
}

impl EhrhartTable {
    /// Rows are computed on separate threads.
    pub fn compute(r: u32, s: u32, max_l: u32, bound: usize) -> Result<Self> {
        let rows = std::thread::scope(|scope| {
            let handles: Vec<_> = (1..=s)
                .map(|k| {
                    scope.spawn(move || {
                        (0..=max_l).map(|l| lattice_points_polygonal_bounded(r, s, k, l, bound)).collect::<Result<Vec<_>>>()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("counting thread panicked")).collect::<Result<Vec<_>>>()
        })?;
        Ok(EhrhartTable { r, s, rows })
    }

    pub fn rows_agree(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] == w[1])
    }

    pub fn matches_macmahon(&self) -> bool {
        self.rows.iter().all(|row| {
            row.iter().enumerate().all(|(l, &n)| BigInt::from(n) == macmahon(self.r, self.s, l as u32))
        })
    }
}

impl fmt::Display for EhrhartTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "k={} {}", k + 1, cells.join(" "))?;
        }
        Ok(())
    }
}

/// Checks that `pp_bijection` is a height-preserving bijection between all
/// plane partitions of `T_{r,s}` and `R_{r,s}` with entries at most `ℓ`.
pub fn verify_pp_bijection(r: u32, s: u32, l: u32) -> Result<VerificationReport> {
    let t = Arc::new(GridPoset::trapezoid(r, s)?);
    let rect = Arc::new(GridPoset::rectangle(r, s)?);
    let ts = enumerate_plane_partitions(&t, l)?;
    let rs = enumerate_plane_partitions(&rect, l)?;
    let tag = format!("r={r} s={s} l={l}");
    let mut report = VerificationReport::new();

    let mut images = Vec::with_capacity(ts.len());
    let mut heights = true;
    let mut round_trip = true;
    for x in &ts {
        let y = pp_bijection(x, BijectionDirection::T2R)?;
        heights &= y.height() == x.height();
        round_trip &= pp_bijection(&y, BijectionDirection::R2T)? == *x;
        images.push(y);
    }
    images.sort_by(|a, b| a.values().cmp(b.values()));
    let mut targets = rs.clone();
    targets.sort_by(|a, b| a.values().cmp(b.values()));
    report.record(format!("bijection heights {tag}"), heights, String::new());
    report.record(format!("bijection round trip {tag}"), round_trip, String::new());
    report.record(format!("bijection onto {tag}"), images == targets, format!("{} images, {} targets", images.len(), targets.len()));
    for h in 0..=l {
        let a = ts.iter().filter(|x| x.height() == h).count();
        let b = rs.iter().filter(|x| x.height() == h).count();
        report.record(format!("bijection height-{h} count {tag}"), a == b, format!("{a} = {b}"));
    }
    let n = macmahon(r, s, l);
    report.record(format!("bijection macmahon {tag}"), BigInt::from(rs.len()) == n && ts.len() == rs.len(), format!("{} = {n}", ts.len()));
    Ok(report)
}

/// Whether every label is a nonnegative integer.
pub fn is_lattice_point(x: &Labeling<Tropical>) -> bool {
    x.values().iter().all(|v| matches!(v.to_integer(), Some(n) if n >= 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macmahon_values() {
        for l in 0..5 {
            assert_eq!(macmahon(1, 1, l), BigInt::from(l + 1));
        }
        assert_eq!(macmahon(2, 2, 2), BigInt::from(20));
        assert_eq!(macmahon(4, 4, 1), BigInt::from(70));
        assert_eq!(macmahon(0, 3, 3), BigInt::from(1));
    }

    #[test]
    fn enumeration_matches_macmahon() {
        for (r, s) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
            let p = Arc::new(GridPoset::rectangle(r, s).unwrap());
            for l in 0..=3 {
                let n = enumerate_plane_partitions(&p, l).unwrap().len();
                assert_eq!(BigInt::from(n), macmahon(r, s, l), "r={r} s={s} l={l}");
            }
        }
        let big = Arc::new(GridPoset::rectangle(5, 4).unwrap());
        assert!(matches!(enumerate_plane_partitions(&big, 1), Err(Error::TooLarge(_))));
    }

    #[test]
    fn zeros_map_to_zeros() {
        let t = Arc::new(GridPoset::trapezoid(3, 3).unwrap());
        let y = pp_bijection(&PlanePartition::zeros(t), BijectionDirection::T2R).unwrap();
        assert!(y.values().iter().all(|&v| v == 0));
        assert_eq!(y.poset().kind(), PosetKind::Rectangle { r: 3, s: 3 });
    }

    #[test]
    fn rejects_non_partition() {
        let t = Arc::new(GridPoset::trapezoid(2, 2).unwrap());
        assert!(PlanePartition::new(t.clone(), vec![2, 1, 0]).is_err());
        let r = Arc::new(GridPoset::rectangle(2, 2).unwrap());
        assert!(pp_bijection(&PlanePartition::zeros(r), BijectionDirection::T2R).is_err());
    }

    #[test]
    fn lattice_points_small() {
        for k in 1..=3 {
            for l in 0..=2 {
                assert_eq!(BigInt::from(lattice_points_polygonal(3, 3, k, l).unwrap()), macmahon(3, 3, l));
            }
        }
        assert!(matches!(lattice_points_polygonal_bounded(4, 4, 2, 3, 10), Err(Error::TooLarge(_))));
    }

    #[test]
    fn polytope_map_small() {
        let rep = verify_polytope_map(3, 3, 1, 2, LATTICE_BOUND).unwrap();
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn bijection_small() {
        let rep = verify_pp_bijection(2, 2, 2).unwrap();
        assert!(rep.all_passed(), "{rep}");
    }

    fn load(poset: GridPoset, data: &str) -> PlanePartition {
        let text: String = data.split(", ").map(|t| t.replace('/', " ") + "\n").collect();
        PlanePartition::parse(Arc::new(poset), &text).unwrap()
    }

    #[test]
    fn height_four_pair() {
        let t = load(GridPoset::trapezoid(5, 4).unwrap(), "4/1/0, 5/1/1, 3/2/1, 4/2/2, 5/2/2, 6/2/3, 2/3/2, 3/3/2, 4/3/2, 5/3/3, 6/3/3, 7/3/4, 1/4/0, 2/4/3, 3/4/3, 4/4/3, 5/4/4, 6/4/4, 7/4/4, 8/4/4");
        let r = load(GridPoset::rectangle(5, 4).unwrap(), "1/1/0, 2/1/0, 3/1/0, 4/1/1, 5/1/1, 1/2/0, 2/2/1, 3/2/3, 4/2/3, 5/2/4, 1/3/0, 2/3/1, 3/3/3, 4/3/4, 5/3/4, 1/4/1, 2/4/3, 3/4/3, 4/4/4, 5/4/4");
        assert_eq!(pp_bijection(&t, BijectionDirection::T2R).unwrap(), r);
        assert_eq!(pp_bijection(&r, BijectionDirection::R2T).unwrap(), t);
        assert_eq!((t.height(), r.height()), (4, 4));
    }
}
