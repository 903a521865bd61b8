//! The maps `ζ_k : I_{k+1} → I_k` and their composite `ζ : T_{r,s} → R_{r,s}`.
//!
//! Inside the window `M_k = [(k,1),(r+k,k+1)]` the map is inverse antichain
//! rowmotion (with the label at `(k,1)` set to one); outside it, labels
//! shift by one step. All index bookkeeping lives in [`IntermediateWindow`].

use std::sync::Arc;

use crate::algebra::{family_weight, Labeling, Rational, Semifield};
use crate::error::{Error, Result};
use crate::poset::{ChainFamily, Element, GridPoset, PosetKind};
use crate::report::VerificationReport;
use crate::rowmotion::{
    antichain_rowmotion, antichain_rowmotion_inverse_by_edgeweight, partial_transfers, polygonal_rowmotion,
    transfer, PartialTransferValues, TransferDirection,
};

/// `I_{r,s,k}` tagged as a rectangle for `k = 1` and a trapezoid for `k = s`.
pub fn intermediate_poset(r: u32, s: u32, k: u32) -> Result<GridPoset> {
    if k == 1 {
        GridPoset::rectangle(r, s)
    } else if k == s {
        GridPoset::trapezoid(r, s)
    } else {
        GridPoset::intermediate(r, s, k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Window(usize),
    Shifted(usize),
}

/// Geometry of one step `ζ_k`: the window, the shifted cells, and lookup
/// tables in both directions.
#[derive(Clone, Debug)]
pub struct IntermediateWindow {
    r: u32,
    s: u32,
    k: u32,
    source: Arc<GridPoset>,
    target: Arc<GridPoset>,
    window: Arc<GridPoset>,
    below: Vec<Element>,
    above: Vec<Element>,
    /// For each target index, where its value comes from.
    forward: Vec<Slot>,
    /// For each source index, where its value goes.
    backward: Vec<Slot>,
}

impl IntermediateWindow {
    pub fn new(r: u32, s: u32, k: u32) -> Result<Self> {
        if s < 2 || k < 1 || k >= s {
            return Err(Error::BadK { k, max: s.saturating_sub(1) });
        }
        let source = Arc::new(intermediate_poset(r, s, k + 1)?);
        let target = Arc::new(intermediate_poset(r, s, k)?);
        let (ri, ki) = (r as i32, k as i32);
        let cells = GridPoset::right_trapezoid(r, s)?
            .cells()
            .iter()
            .copied()
            .filter(|e| e.i >= ki && e.i <= ri + ki && e.j <= ki + 1)
            .collect::<Vec<_>>();
        let window = Arc::new(GridPoset::from_cells(PosetKind::Induced, Some((r, s)), cells)?);

        let mut below = Vec::new();
        let mut above = Vec::new();
        let mut forward = Vec::with_capacity(target.len());
        let mut backward = vec![None; source.len()];
        for (n, &c) in target.cells().iter().enumerate() {
            let slot = if let Some(w) = window.index_of(c) {
                Slot::Window(w)
            } else {
                let from = if c.i < ki {
                    below.push(c);
                    c.offset(0, 1)
                } else {
                    above.push(c);
                    c.offset(1, 0)
                };
                let m = source.index_of(from).ok_or(Error::MissingElement(from))?;
                backward[m] = Some(Slot::Shifted(n));
                Slot::Shifted(m)
            };
            forward.push(slot);
        }
        let backward = source
            .cells()
            .iter()
            .zip(backward)
            .map(|(&d, slot)| match window.index_of(d) {
                Some(w) => Ok(Slot::Window(w)),
                None => slot.ok_or(Error::MissingElement(d)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntermediateWindow { r, s, k, source, target, window, below, above, forward, backward })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn dims(&self) -> (u32, u32) {
        (self.r, self.s)
    }

    /// `I_{k+1}`.
    pub fn source(&self) -> &Arc<GridPoset> {
        &self.source
    }

    /// `I_k`.
    pub fn target(&self) -> &Arc<GridPoset> {
        &self.target
    }

    /// `M_k`.
    pub fn window(&self) -> &Arc<GridPoset> {
        &self.window
    }

    /// Cells of `I_k` with `i < k`; each takes the label of its NE neighbor.
    pub fn below(&self) -> &[Element] {
        &self.below
    }

    /// Cells of `I_k` with `j > k+1`; each takes the label of its NW neighbor.
    pub fn above(&self) -> &[Element] {
        &self.above
    }

    /// `(k,1)`.
    pub fn window_min(&self) -> Element {
        Element::new(self.k as i32, 1)
    }

    /// `(r+k,k+1)`.
    pub fn window_max(&self) -> Element {
        Element::new((self.r + self.k) as i32, self.k as i32 + 1)
    }

    fn check_source<A: Semifield>(&self, x: &Labeling<A>) -> Result<Labeling<A>> {
        self.check(x, &self.source, self.k + 1)
    }

    fn check_target<A: Semifield>(&self, x: &Labeling<A>) -> Result<Labeling<A>> {
        self.check(x, &self.target, self.k)
    }

    fn check<A: Semifield>(&self, x: &Labeling<A>, poset: &Arc<GridPoset>, k: u32) -> Result<Labeling<A>> {
        if x.poset().kind().intermediate_params() != Some((self.r, self.s, k)) {
            return Err(Error::WrongKind {
                expected: format!("intermediate {} {} {}", self.r, self.s, k),
                found: x.poset().kind().to_string(),
            });
        }
        x.validate()?;
        x.on(poset.clone())
    }

    /// `x̄`: `x` restricted to the window with `anchor` at `(k,1)`.
    pub fn restrict<A: Semifield>(&self, x: &Labeling<A>, anchor: A) -> Labeling<A> {
        let min = self.window_min();
        Labeling::from_fn(self.window.clone(), |e| if e == min { anchor.clone() } else { x.at(e).clone() })
    }
}

/// `ζ_k(x)` with the conventional label one at `(k,1)`.
pub fn zeta_k<A: Semifield>(x: &Labeling<A>, k: u32) -> Result<Labeling<A>> {
    zeta_k_with_anchor(x, k, A::one())
}

/// `ζ_k(x)` with an arbitrary admissible label at `(k,1)`; the result does not depend on it.
pub fn zeta_k_with_anchor<A: Semifield>(x: &Labeling<A>, k: u32, anchor: A) -> Result<Labeling<A>> {
    let (r, s, _) = params(x)?;
    let w = IntermediateWindow::new(r, s, k)?;
    apply_forward(&w, x, anchor)
}

fn params<A: Semifield>(x: &Labeling<A>) -> Result<(u32, u32, u32)> {
    x.poset().kind().intermediate_params().ok_or_else(|| Error::WrongKind {
        expected: "intermediate".into(),
        found: x.poset().kind().to_string(),
    })
}

fn apply_forward<A: Semifield>(w: &IntermediateWindow, x: &Labeling<A>, anchor: A) -> Result<Labeling<A>> {
    let x = w.check_source(x)?;
    if !anchor.is_admissible() {
        return Err(Error::InvalidLabeling(format!("anchor label {anchor} is not admissible")));
    }
    let inner = antichain_rowmotion_inverse_by_edgeweight(&w.restrict(&x, anchor));
    let values = w
        .forward
        .iter()
        .map(|slot| match *slot {
            Slot::Window(m) => inner.value(m).clone(),
            Slot::Shifted(m) => x.value(m).clone(),
        })
        .collect();
    Labeling::new(w.target.clone(), values)
}

fn apply_backward<A: Semifield>(w: &IntermediateWindow, z: &Labeling<A>) -> Result<Labeling<A>> {
    let z = w.check_target(z)?;
    let max = w.window_max();
    let bar = Labeling::from_fn(w.window.clone(), |e| if e == max { A::one() } else { z.at(e).clone() });
    let inner = antichain_rowmotion(&bar, 1);
    let values = w
        .backward
        .iter()
        .map(|slot| match *slot {
            Slot::Window(m) => inner.value(m).clone(),
            Slot::Shifted(n) => z.value(n).clone(),
        })
        .collect();
    Labeling::new(w.source.clone(), values)
}

/// `ζ_k⁻¹ : I_k → I_{k+1}`.
pub fn zeta_k_inverse<A: Semifield>(z: &Labeling<A>, k: u32) -> Result<Labeling<A>> {
    let (r, s, _) = params(z)?;
    let w = IntermediateWindow::new(r, s, k)?;
    apply_backward(&w, z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaDirection {
    Forward,
    Inverse,
}

impl std::str::FromStr for ZetaDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fwd" | "forward" => Ok(ZetaDirection::Forward),
            "inv" | "inverse" => Ok(ZetaDirection::Inverse),
            other => Err(Error::Parse { line: 0, message: format!("unknown direction `{other}`") }),
        }
    }
}

/// `ζ = ζ_1 ∘ … ∘ ζ_{s-1}` from `T_{r,s}` to `R_{r,s}`, or its inverse.
pub fn zeta<A: Semifield>(x: &Labeling<A>, direction: ZetaDirection) -> Result<Labeling<A>> {
    let (r, s, k) = params(x)?;
    let (expected, end) = match direction {
        ZetaDirection::Forward => (s, GridPoset::rectangle(r, s)?),
        ZetaDirection::Inverse => (1, GridPoset::trapezoid(r, s)?),
    };
    if k != expected {
        return Err(Error::WrongKind {
            expected: format!("intermediate {r} {s} {expected}"),
            found: x.poset().kind().to_string(),
        });
    }
    x.validate()?;
    let mut cur = x.clone();
    match direction {
        ZetaDirection::Forward => {
            for k in (1..s).rev() {
                cur = zeta_k(&cur, k)?;
            }
        }
        ZetaDirection::Inverse => {
            for k in 1..s {
                cur = zeta_k_inverse(&cur, k)?;
            }
        }
    }
    cur.on(Arc::new(end))
}

/// `w_𝒫(x) = w_𝒫(ζ_k(x))` for the polygonal chains on each side.
pub fn verify_polygonal_weight<A: Semifield>(x: &Labeling<A>, k: u32) -> Result<bool> {
    let z = zeta_k(x, k)?;
    Ok(family_weight(x, &ChainFamily::polygonal()) == family_weight(&z, &ChainFamily::polygonal()))
}

/// Total maximal-chain weight of `x` on `T_{r,s}` equals that of `ζ(x)` on `R_{r,s}`.
pub fn verify_chain_weight<A: Semifield>(x: &Labeling<A>) -> Result<bool> {
    let z = zeta(x, ZetaDirection::Forward)?;
    Ok(family_weight(x, &ChainFamily::maximal()) == family_weight(&z, &ChainFamily::maximal()))
}

/// `ζ_k ∘ ϱ̃_{k+1} = ϱ̃_k ∘ ζ_k` at `x`.
pub fn verify_equivariance<A: Semifield>(x: &Labeling<A>, k: u32) -> Result<bool> {
    let lhs = zeta_k(&polygonal_rowmotion(x, 1)?, k)?;
    let rhs = polygonal_rowmotion(&zeta_k(x, k)?, 1)?;
    Ok(lhs == rhs)
}

/// `ζ ∘ ρ̃_T = ρ̃_R ∘ ζ` at `x`.
pub fn verify_full_equivariance<A: Semifield>(x: &Labeling<A>) -> Result<bool> {
    let lhs = zeta(&antichain_rowmotion(x, 1), ZetaDirection::Forward)?;
    let rhs = antichain_rowmotion(&zeta(x, ZetaDirection::Forward)?, 1);
    Ok(lhs == rhs)
}

fn q(v: &Rational) -> Rational {
    v.clone()
}

fn record(report: &mut VerificationReport, name: String, lhs: Rational, rhs: Rational) {
    let ok = lhs == rhs;
    report.record(name, ok, format!("{lhs} = {rhs}"));
}

struct Sides {
    x: PartialTransferValues<Rational>,
    z: PartialTransferValues<Rational>,
    xp: Arc<GridPoset>,
    zp: Arc<GridPoset>,
}

impl Sides {
    fn xi(&self, e: Element) -> Option<usize> {
        self.xp.index_of(e)
    }

    fn zi(&self, e: Element) -> Option<usize> {
        self.zp.index_of(e)
    }
}

/// Partial-transfer identities relating `x` on `I_{k+1}` and `z = ζ_k(x)`,
/// with `y = ψ(x̄)` on the window.
pub fn verify_outside_shifts(x: &Labeling<Rational>, k: u32) -> Result<VerificationReport> {
    let (r, s, _) = params(x)?;
    let w = IntermediateWindow::new(r, s, k)?;
    let x = w.check_source(x)?;
    let z = apply_forward(&w, &x, Rational::one())?;
    let sides = Sides { x: partial_transfers(&x)?, z: partial_transfers(&z)?, xp: w.source.clone(), zp: w.target.clone() };
    let y = transfer(&w.restrict(&x, Rational::one()), TransferDirection::Psi);
    let mut report = VerificationReport::new();
    let zero = Rational::zero();

    for &p in w.below() {
        let (pi, qi) = (sides.zi(p).unwrap(), sides.xi(p.offset(0, 1)).unwrap());
        record(&mut report, format!("outside-below psi1 {p}"), q(&sides.z.psi1[pi]), zero.clone());
        record(&mut report, format!("outside-below psi2 {p}"), q(&sides.z.psi2[pi]), q(&sides.x.psi2[qi]));
        record(&mut report, format!("outside-below psi1* {p}"), q(&sides.z.psi1_star[pi]), q(&sides.x.psi1_star[qi]));
    }
    for &p in w.above() {
        let (pi, qi) = (sides.zi(p).unwrap(), sides.xi(p.offset(1, 0)).unwrap());
        record(&mut report, format!("outside-above psi1* {p}"), q(&sides.z.psi1_star[pi]), zero.clone());
        record(&mut report, format!("outside-above psi2* {p}"), q(&sides.z.psi2_star[pi]), q(&sides.x.psi2_star[qi]));
        record(&mut report, format!("outside-above psi1 {p}"), q(&sides.z.psi1[pi]), q(&sides.x.psi1[qi]));
    }

    let m = &w.window;
    let yv = |e: Element| y.at(e).clone();
    for (mi, &p) in m.cells().iter().enumerate() {
        let dirs = m.direction_sets(p);
        if p != w.window_min() {
            let pi = sides.xi(p).unwrap();
            let through = |u: Element| -> Rational {
                let ui = m.index_of(u).unwrap();
                Rational::sum(&m.upper_covers(ui).iter().map(|&v| yv(p).div(&yv(m.element(v)))).collect::<Vec<_>>())
            };
            let rhs1 = Rational::sum(
                &dirs.se.iter().map(|&u| through(u).mul(&sides.z.psi1[sides.zi(u).unwrap()])).collect::<Vec<_>>(),
            );
            let rhs2 = Rational::sum(
                &dirs
                    .sw
                    .iter()
                    .map(|&u| through(u).mul(&sides.z.psi(sides.zi(u).unwrap())))
                    .collect::<Vec<_>>(),
            );
            record(&mut report, format!("shift-down psi1 {p}"), q(&sides.x.psi1[pi]), rhs1);
            record(&mut report, format!("shift-down psi2 {p}"), q(&sides.x.psi2[pi]), rhs2);
        }
        if p != w.window_max() {
            let pi = sides.zi(p).unwrap();
            let through = |v: Element| -> Rational {
                let vi = m.index_of(v).unwrap();
                Rational::sum(&m.lower_covers(vi).iter().map(|&u| yv(m.element(u)).div(&yv(p))).collect::<Vec<_>>())
            };
            let rhs1 = Rational::sum(
                &dirs.ne.iter().map(|&v| through(v).mul(&sides.x.psi1_star[sides.xi(v).unwrap()])).collect::<Vec<_>>(),
            );
            let rhs2 = Rational::sum(
                &dirs
                    .nw
                    .iter()
                    .map(|&v| through(v).mul(&sides.x.psi_star(sides.xi(v).unwrap())))
                    .collect::<Vec<_>>(),
            );
            record(&mut report, format!("shift-down-dual psi1* {p}"), q(&sides.z.psi1_star[pi]), rhs1);
            record(&mut report, format!("shift-down-dual psi2* {p}"), q(&sides.z.psi2_star[pi]), rhs2);
        }

        // p covers-from-below pairs: u = p with upper covers (u+(1,0), u+(0,1)).
        let u = p;
        let ups = m.upper_covers(mi);
        if ups.len() == 2 {
            let (pl, qr) = (u.offset(1, 0), u.offset(0, 1));
            let (ypl, yqr) = (yv(pl), yv(qr));
            let tot = ypl.add(&yqr);
            let (pli, qri, ui) = (sides.xi(pl).unwrap(), sides.xi(qr).unwrap(), sides.zi(u).unwrap());
            let lhs1 = sides.x.psi1[pli].mul(&yqr.div(&tot)).sub(&sides.x.psi1[qri].mul(&ypl.div(&tot)));
            let lhs2 = sides.x.psi2[pli].mul(&yqr.div(&tot)).sub(&sides.x.psi2[qri].mul(&ypl.div(&tot)));
            record(&mut report, format!("shift-up psi1 {u}"), lhs1, q(&sides.z.psi1[ui]));
            record(&mut report, format!("shift-up psi2 {u}"), lhs2, sides.z.psi(ui).neg());
        }
        let v = p;
        let downs = m.lower_covers(mi);
        if downs.len() == 2 {
            let (pl, qr) = (v.offset(0, -1), v.offset(-1, 0));
            let (ypl, yqr) = (yv(pl), yv(qr));
            let tot = ypl.add(&yqr);
            let (pli, qri, vi) = (sides.zi(pl).unwrap(), sides.zi(qr).unwrap(), sides.xi(v).unwrap());
            let lhs1 = sides.z.psi1_star[pli].mul(&ypl.div(&tot)).sub(&sides.z.psi1_star[qri].mul(&yqr.div(&tot)));
            let lhs2 = sides.z.psi2_star[pli].mul(&ypl.div(&tot)).sub(&sides.z.psi2_star[qri].mul(&yqr.div(&tot)));
            record(&mut report, format!("shift-up-dual psi1* {v}"), lhs1, q(&sides.x.psi1_star[vi]));
            record(&mut report, format!("shift-up-dual psi2* {v}"), lhs2, sides.x.psi_star(vi).neg());
        }
    }
    Ok(report)
}

/// `Σ_{(i,j) ≠ (2,2)} ψ*_i(x)_p ψ_j(ϱ̃(x))_p = 1` at every `p` of an intermediate poset.
pub fn verify_special_rho<A: Semifield>(x: &Labeling<A>) -> Result<bool> {
    let before = partial_transfers(x)?;
    let after = partial_transfers(&polygonal_rowmotion(x, 1)?)?;
    Ok((0..x.values().len()).all(|n| {
        let total = before.psi1_star[n]
            .mul(&after.psi1[n])
            .add(&before.psi1_star[n].mul(&after.psi2[n]))
            .add(&before.psi2_star[n].mul(&after.psi1[n]));
        total == A::one()
    }))
}

/// Neighbors used by the termwise comparison: `v_1, v_2` above `p` in `I_{k+1}`
/// and `u_1, u_2` below `p` in `I_k`.
fn neighbor_terms(
    p: Element,
    src: &GridPoset,
    tgt: &GridPoset,
    upper: &PartialTransferValues<Rational>,
    lower: &PartialTransferValues<Rational>,
    dual: bool,
) -> Rational {
    let pairs = [(p.offset(1, 0), p.offset(0, -1)), (p.offset(0, 1), p.offset(-1, 0))];
    let mut acc = Rational::zero();
    for (t, (v, u)) in pairs.into_iter().enumerate() {
        let (Some(vi), Some(ui)) = (src.index_of(v), tgt.index_of(u)) else { continue };
        let term = if dual {
            lower.psi1[ui].mul(&upper.psi2_star[vi]).sub(&lower.psi2[ui].mul(&upper.psi1_star[vi]))
        } else {
            upper.psi1_star[vi].mul(&lower.psi2[ui]).sub(&upper.psi2_star[vi].mul(&lower.psi1[ui]))
        };
        acc = if t == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The two termwise differences behind equivariance, at every interior `p` of the window:
/// `x_p⁻¹ − z′_p⁻¹` with `z′ = ζ_k(ϱ̃(x))`, and `z″_p⁻¹ − x_p⁻¹` with `z″ = ϱ̃(ζ_k(x))`.
pub fn verify_difference_identities(x: &Labeling<Rational>, k: u32) -> Result<VerificationReport> {
    let (r, s, _) = params(x)?;
    let w = IntermediateWindow::new(r, s, k)?;
    let x = w.check_source(x)?;
    let x_next = polygonal_rowmotion(&x, 1)?;
    let z_prime = apply_forward(&w, &x_next, Rational::one())?;
    let z = apply_forward(&w, &x, Rational::one())?;
    let z_second = polygonal_rowmotion(&z, 1)?;
    let tx = partial_transfers(&x)?;
    let tz1 = partial_transfers(&z_prime)?;
    let tz2 = partial_transfers(&z_second)?;
    let mut report = VerificationReport::new();
    for &p in w.window.cells() {
        if p == w.window_min() || p == w.window_max() {
            continue;
        }
        let lhs = x.at(p).inv().sub(&z_prime.at(p).inv());
        let rhs = neighbor_terms(p, &w.source, &w.target, &tx, &tz1, false);
        record(&mut report, format!("x-z {p}"), lhs, rhs);
        let lhs = z_second.at(p).inv().sub(&x.at(p).inv());
        let rhs = neighbor_terms(p, &w.source, &w.target, &tx, &tz2, true);
        record(&mut report, format!("x-zdual {p}"), lhs, rhs);
    }
    Ok(report)
}


#[cfg(test)]
mod golden {
    use super::*;
    use crate::algebra::Tropical;

    fn load(poset: GridPoset, data: &str) -> Labeling<Tropical> {
        let text: String = data.split(", ").map(|t| t.replace('/', " ") + "\n").collect();
        Labeling::parse(Arc::new(poset), &text).unwrap()
    }

    #[test]
    fn tropical_steps() {
        let x = load(GridPoset::trapezoid(5, 4).unwrap(), "4/1/0, 5/1/1, 3/2/1, 4/2/1, 5/2/0, 6/2/1, 2/3/2, 3/3/0, 4/3/0, 5/3/1, 6/3/0, 7/3/1, 1/4/0, 2/4/1, 3/4/0, 4/4/0, 5/4/1, 6/4/0, 7/4/0, 8/4/0");
        let z3 = load(GridPoset::intermediate(5, 4, 3).unwrap(), "3/1/0, 4/1/1, 5/1/1, 2/2/2, 3/2/0, 4/2/0, 5/2/1, 6/2/0, 1/3/0, 2/3/1, 3/3/0, 4/3/0, 5/3/0, 6/3/1, 7/3/0, 3/4/1, 4/4/2, 5/4/0, 6/4/0, 7/4/0");
        let z2 = load(GridPoset::intermediate(5, 4, 2).unwrap(), "2/1/0, 3/1/1, 4/1/1, 5/1/1, 1/2/0, 2/2/0, 3/2/0, 4/2/1, 5/2/0, 6/2/1, 2/3/0, 3/3/0, 4/3/0, 5/3/1, 6/3/0, 2/4/1, 3/4/2, 4/4/0, 5/4/0, 6/4/0");
        let z1 = load(GridPoset::rectangle(5, 4).unwrap(), "1/1/0, 2/1/0, 3/1/0, 4/1/1, 5/1/0, 1/2/0, 2/2/1, 3/2/2, 4/2/0, 5/2/1, 1/3/0, 2/3/0, 3/3/0, 4/3/1, 5/3/0, 1/4/1, 2/4/2, 3/4/0, 4/4/0, 5/4/0");
        assert_eq!(zeta_k(&x, 3).unwrap(), z3);
        assert_eq!(zeta_k(&z3, 2).unwrap(), z2);
        assert_eq!(zeta_k(&z2, 1).unwrap(), z1);
        assert_eq!(zeta(&x, ZetaDirection::Forward).unwrap(), z1);
    }

    #[test]
    fn reports_are_not_empty() {
        let t = Arc::new(GridPoset::intermediate(4, 4, 3).unwrap());
        let x = crate::algebra::random_labeling::<Rational>(&t, 2);
        let a = verify_outside_shifts(&x, 2).unwrap();
        let b = verify_difference_identities(&x, 2).unwrap();
        eprintln!("{}{}", a.summary(), b.summary());
        assert!(a.checks.len() > 20 && b.checks.len() > 5);
    }
}
