//! Toggles, rowmotion, transfer maps, antichain rowmotion and polygonal
//! rowmotion, generic over the label algebra.
//!
//! The labels of `ĥ0` and `ĥ1` are fixed at the multiplicative identity.
//! Negative powers always run the inverse map directly.

use std::collections::HashSet;

use crate::algebra::{Labeling, Rational, Semifield};
use crate::error::{Error, Result};
use crate::poset::{Element, GridPoset, PosetKind};

fn sum_or_one<'a, A: Semifield>(items: impl Iterator<Item = &'a A>) -> A {
    let mut items = items.peekable();
    if items.peek().is_none() {
        A::one()
    } else {
        A::sum(items)
    }
}

fn index_of(poset: &GridPoset, p: Element) -> Result<usize> {
    poset.index_of(p).ok_or(Error::MissingElement(p))
}

/// Bottom-up canonical order.
fn canonical_order(poset: &GridPoset) -> Vec<usize> {
    (0..poset.len()).collect()
}

/// Checks that `order` lists every element once, each after its lower covers.
pub fn check_linear_extension(poset: &GridPoset, order: &[usize]) -> Result<()> {
    let bad = |m: &str| Error::InvalidLabeling(format!("not a linear extension: {m}"));
    if order.len() != poset.len() {
        return Err(bad("wrong length"));
    }
    let mut seen = HashSet::new();
    for &n in order {
        if n >= poset.len() || !seen.insert(n) {
            return Err(bad("index repeated or out of range"));
        }
        if poset.lower_covers(n).iter().any(|q| !seen.contains(q)) {
            return Err(bad("an element precedes one of its lower covers"));
        }
    }
    Ok(())
}

fn toggle_in_place<A: Semifield>(poset: &GridPoset, values: &mut [A], idx: usize) {
    let up = sum_or_one(poset.upper_covers(idx).iter().map(|&q| values[q].inv()).collect::<Vec<_>>().iter());
    let down = sum_or_one(poset.lower_covers(idx).iter().map(|&q| &values[q]));
    values[idx] = up.inv().mul(&down).mul(&values[idx].inv());
}

/// The birational toggle `t_p`.
pub fn toggle<A: Semifield>(x: &Labeling<A>, p: Element) -> Result<Labeling<A>> {
    let poset = x.poset().clone();
    let idx = index_of(&poset, p)?;
    let mut values = x.values().to_vec();
    toggle_in_place(&poset, &mut values, idx);
    Labeling::new(poset, values)
}

/// One step of rowmotion: toggles from the top of `order` (a bottom-up linear
/// extension) down to its bottom.
pub fn rowmotion_with_order<A: Semifield>(x: &Labeling<A>, order: &[usize]) -> Result<Labeling<A>> {
    let poset = x.poset().clone();
    check_linear_extension(&poset, order)?;
    let mut values = x.values().to_vec();
    for &idx in order.iter().rev() {
        toggle_in_place(&poset, &mut values, idx);
    }
    Labeling::new(poset, values)
}

/// `ρ^power`; negative powers toggle from the bottom up.
pub fn rowmotion<A: Semifield>(x: &Labeling<A>, power: i64) -> Labeling<A> {
    let poset = x.poset().clone();
    let order = canonical_order(&poset);
    let mut values = x.values().to_vec();
    for _ in 0..power.unsigned_abs() {
        if power > 0 {
            for &idx in order.iter().rev() {
                toggle_in_place(&poset, &mut values, idx);
            }
        } else {
            for &idx in &order {
                toggle_in_place(&poset, &mut values, idx);
            }
        }
    }
    Labeling::new(poset, values).expect("length preserved")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferDirection {
    /// `ψ`
    Psi,
    /// `ψ⁻¹`
    PsiInv,
    /// `ψ*`
    PsiStar,
    /// `ψ*⁻¹`
    PsiStarInv,
}

fn psi_values<A: Semifield>(poset: &GridPoset, x: &[A]) -> Vec<A> {
    let mut y: Vec<A> = Vec::with_capacity(x.len());
    for (idx, xv) in x.iter().enumerate() {
        let below = sum_or_one(poset.lower_covers(idx).iter().map(|&q| &y[q]));
        y.push(xv.mul(&below));
    }
    y
}

fn psi_star_values<A: Semifield>(poset: &GridPoset, x: &[A]) -> Vec<A> {
    let mut y: Vec<Option<A>> = vec![None; x.len()];
    for idx in (0..x.len()).rev() {
        let above = sum_or_one(poset.upper_covers(idx).iter().map(|&q| y[q].as_ref().expect("computed")));
        y[idx] = Some(x[idx].mul(&above));
    }
    y.into_iter().map(|v| v.expect("computed")).collect()
}

/// Transfer maps by dynamic programming along the canonical order.
pub fn transfer<A: Semifield>(x: &Labeling<A>, direction: TransferDirection) -> Labeling<A> {
    let poset = x.poset().clone();
    let v = x.values();
    let values = match direction {
        TransferDirection::Psi => psi_values(&poset, v),
        TransferDirection::PsiStar => psi_star_values(&poset, v),
        TransferDirection::PsiInv => (0..v.len())
            .map(|idx| v[idx].div(&sum_or_one(poset.lower_covers(idx).iter().map(|&q| &v[q]))))
            .collect(),
        TransferDirection::PsiStarInv => (0..v.len())
            .map(|idx| v[idx].div(&sum_or_one(poset.upper_covers(idx).iter().map(|&q| &v[q]))))
            .collect(),
    };
    Labeling::new(poset, values).expect("length preserved")
}

/// The antichain toggle `τ_p`: `x_p` becomes the inverse of the total weight
/// of maximal chains through `p`.
pub fn antichain_toggle<A: Semifield>(x: &Labeling<A>, p: Element) -> Result<Labeling<A>> {
    let poset = x.poset().clone();
    let idx = index_of(&poset, p)?;
    let psi = psi_values(&poset, x.values());
    let psi_star = psi_star_values(&poset, x.values());
    let mut values = x.values().to_vec();
    values[idx] = psi[idx].mul(&psi_star[idx]).div(&values[idx]).inv();
    Labeling::new(poset, values)
}

/// Applies `τ_p` bottom-up along `order`.
///
/// When `p` is toggled, every element below it has been toggled and every
/// element above it has not, so `ψ` of the lower covers can be maintained
/// incrementally and `ψ*` of the upper covers read off the input.
fn antichain_forward<A: Semifield>(poset: &GridPoset, x: &[A], order: &[usize]) -> Vec<A> {
    let psi_star = psi_star_values(poset, x);
    let mut values = x.to_vec();
    let mut psi: Vec<A> = vec![A::one(); x.len()];
    for &idx in order {
        let below = sum_or_one(poset.lower_covers(idx).iter().map(|&q| &psi[q]));
        let above = sum_or_one(poset.upper_covers(idx).iter().map(|&q| &psi_star[q]));
        // weight through p = x_p · below · above
        values[idx] = values[idx].mul(&below).mul(&above).inv();
        psi[idx] = values[idx].mul(&below);
    }
    values
}

/// Applies `τ_p` top-down along `order` reversed, i.e. `ρ̃⁻¹`.
fn antichain_backward<A: Semifield>(poset: &GridPoset, x: &[A], order: &[usize]) -> Vec<A> {
    let psi = psi_values(poset, x);
    let mut values = x.to_vec();
    let mut psi_star: Vec<A> = vec![A::one(); x.len()];
    for &idx in order.iter().rev() {
        let below = sum_or_one(poset.lower_covers(idx).iter().map(|&q| &psi[q]));
        let above = sum_or_one(poset.upper_covers(idx).iter().map(|&q| &psi_star[q]));
        values[idx] = values[idx].mul(&below).mul(&above).inv();
        psi_star[idx] = values[idx].mul(&above);
    }
    values
}

pub fn antichain_rowmotion_with_order<A: Semifield>(x: &Labeling<A>, order: &[usize]) -> Result<Labeling<A>> {
    let poset = x.poset().clone();
    check_linear_extension(&poset, order)?;
    let values = antichain_forward(&poset, x.values(), order);
    Labeling::new(poset, values)
}

/// `ρ̃⁻¹` by reversed toggles.
pub fn antichain_rowmotion_inverse_by_toggles<A: Semifield>(x: &Labeling<A>) -> Labeling<A> {
    let poset = x.poset().clone();
    let values = antichain_backward(&poset, x.values(), &canonical_order(&poset));
    Labeling::new(poset, values).expect("length preserved")
}

/// `ρ̃⁻¹` from edge weights: with `y = ψ(x)` and `y_ĥ1 = 1`,
/// `z_p⁻¹ = Σ_{q ⋗ p} y_p / y_q`.
pub fn antichain_rowmotion_inverse_by_edgeweight<A: Semifield>(x: &Labeling<A>) -> Labeling<A> {
    let poset = x.poset().clone();
    let y = psi_values(&poset, x.values());
    let values = (0..y.len())
        .map(|idx| {
            let ups = poset.upper_covers(idx);
            let s = if ups.is_empty() { y[idx].clone() } else { A::sum(&ups.iter().map(|&q| y[idx].div(&y[q])).collect::<Vec<_>>()) };
            s.inv()
        })
        .collect();
    Labeling::new(poset, values).expect("length preserved")
}

/// `ρ̃^power`; negative powers use the edge-weight inverse.
pub fn antichain_rowmotion<A: Semifield>(x: &Labeling<A>, power: i64) -> Labeling<A> {
    let poset = x.poset().clone();
    let order = canonical_order(&poset);
    let mut cur = x.clone();
    for _ in 0..power.unsigned_abs() {
        cur = if power > 0 {
            Labeling::new(poset.clone(), antichain_forward(&poset, cur.values(), &order)).expect("length preserved")
        } else {
            antichain_rowmotion_inverse_by_edgeweight(&cur)
        };
    }
    cur
}

/// With `z = ψ⁻¹ ρ⁻¹ ψ(x)`, whether `ψ(x)_p ψ*(z)_p = 1` for every `p`.
pub fn dual_transfer_identity_check(x: &Labeling<Rational>) -> bool {
    let z = transfer(&rowmotion(&transfer(x, TransferDirection::Psi), -1), TransferDirection::PsiInv);
    let psi = transfer(x, TransferDirection::Psi);
    let psi_star = transfer(&z, TransferDirection::PsiStar);
    psi.values().iter().zip(psi_star.values()).all(|(a, b)| a.mul(b) == Rational::one())
}

/// `ψ₁, ψ₂, ψ*₁, ψ*₂` on an intermediate poset, indexed canonically.
///
/// `ψ₁(x)_p` sums chains from a minimal element to `p` that start at `(k,1)`
/// or meet the left border; `ψ*₁(x)_p` sums chains from `p` to the maximum
/// that meet the left border. The `2` versions sum the remaining chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTransferValues<A> {
    pub psi1: Vec<A>,
    pub psi2: Vec<A>,
    pub psi1_star: Vec<A>,
    pub psi2_star: Vec<A>,
}

impl<A: Semifield> PartialTransferValues<A> {
    pub fn psi(&self, idx: usize) -> A {
        self.psi1[idx].add(&self.psi2[idx])
    }

    pub fn psi_star(&self, idx: usize) -> A {
        self.psi1_star[idx].add(&self.psi2_star[idx])
    }
}

/// Context for the polygonal recurrences: the anchor `(k,1)` and the left border.
struct Polygonal<'a> {
    poset: &'a GridPoset,
    anchor: Element,
}

impl<'a> Polygonal<'a> {
    fn new(poset: &'a GridPoset) -> Result<Self> {
        match poset.kind() {
            PosetKind::Rectangle { .. } | PosetKind::Trapezoid { .. } | PosetKind::Intermediate { .. } => {}
            other => {
                return Err(Error::WrongKind { expected: "intermediate".into(), found: other.to_string() });
            }
        }
        let anchor = poset.polygonal_anchor().expect("intermediate kinds have an anchor");
        Ok(Polygonal { poset, anchor })
    }

    fn on_l(&self, idx: usize) -> bool {
        self.poset.on_left_border(self.poset.element(idx))
    }

    /// `(ψ₁, ψ₂)` at `idx` given the label there and the values at lower covers.
    fn down<A: Semifield>(&self, idx: usize, xp: &A, psi1: &[A], psi2: &[A]) -> (A, A) {
        let lower = self.poset.lower_covers(idx);
        if lower.is_empty() {
            if self.poset.element(idx) == self.anchor || self.on_l(idx) {
                (xp.clone(), A::zero())
            } else {
                (A::zero(), xp.clone())
            }
        } else {
            let s1 = A::sum(lower.iter().map(|&q| &psi1[q]));
            let s2 = A::sum(lower.iter().map(|&q| &psi2[q]));
            if self.on_l(idx) {
                (xp.mul(&s1.add(&s2)), A::zero())
            } else {
                (xp.mul(&s1), xp.mul(&s2))
            }
        }
    }

    /// `(ψ*₁, ψ*₂)` at `idx` given the label there and the values at upper covers.
    fn up<A: Semifield>(&self, idx: usize, xp: &A, star1: &[A], star2: &[A]) -> (A, A) {
        let upper = self.poset.upper_covers(idx);
        if upper.is_empty() {
            if self.on_l(idx) {
                (xp.clone(), A::zero())
            } else {
                (A::zero(), xp.clone())
            }
        } else {
            let s1 = A::sum(upper.iter().map(|&q| &star1[q]));
            let s2 = A::sum(upper.iter().map(|&q| &star2[q]));
            if self.on_l(idx) {
                (xp.mul(&s1.add(&s2)), A::zero())
            } else {
                (xp.mul(&s1), xp.mul(&s2))
            }
        }
    }

    fn all_down<A: Semifield>(&self, x: &[A]) -> (Vec<A>, Vec<A>) {
        let mut p1 = vec![A::zero(); x.len()];
        let mut p2 = vec![A::zero(); x.len()];
        for idx in 0..x.len() {
            let (a, b) = self.down(idx, &x[idx], &p1, &p2);
            p1[idx] = a;
            p2[idx] = b;
        }
        (p1, p2)
    }

    fn all_up<A: Semifield>(&self, x: &[A]) -> (Vec<A>, Vec<A>) {
        let mut s1 = vec![A::zero(); x.len()];
        let mut s2 = vec![A::zero(); x.len()];
        for idx in (0..x.len()).rev() {
            let (a, b) = self.up(idx, &x[idx], &s1, &s2);
            s1[idx] = a;
            s2[idx] = b;
        }
        (s1, s2)
    }
}

/// Weight of polygonal chains through `p`: every pairing except `ψ*₂ ψ₂`.
fn polygonal_through<A: Semifield>(xp: &A, down: &(A, A), up: &(A, A)) -> A {
    let s = up.0.mul(&down.0).add(&up.0.mul(&down.1)).add(&up.1.mul(&down.0));
    s.div(xp)
}

pub fn partial_transfers<A: Semifield>(x: &Labeling<A>) -> Result<PartialTransferValues<A>> {
    let ctx = Polygonal::new(x.poset())?;
    let (psi1, psi2) = ctx.all_down(x.values());
    let (psi1_star, psi2_star) = ctx.all_up(x.values());
    Ok(PartialTransferValues { psi1, psi2, psi1_star, psi2_star })
}

/// Total weight of polygonal chains through each element.
pub fn polygonal_weights<A: Semifield>(x: &Labeling<A>) -> Result<Labeling<A>> {
    let t = partial_transfers(x)?;
    let values = (0..x.values().len())
        .map(|n| {
            polygonal_through(
                x.value(n),
                &(t.psi1[n].clone(), t.psi2[n].clone()),
                &(t.psi1_star[n].clone(), t.psi2_star[n].clone()),
            )
        })
        .collect();
    Labeling::new(x.poset().clone(), values)
}

/// The polygonal toggle `τ′_p`.
pub fn polygonal_toggle<A: Semifield>(x: &Labeling<A>, p: Element) -> Result<Labeling<A>> {
    let idx = index_of(x.poset(), p)?;
    let w = polygonal_weights(x)?;
    let mut out = x.clone();
    out.set_value(idx, w.value(idx).inv());
    Ok(out)
}

fn polygonal_forward<A: Semifield>(ctx: &Polygonal<'_>, x: &[A], order: &[usize]) -> Vec<A> {
    let (s1, s2) = ctx.all_up(x);
    let mut values = x.to_vec();
    let mut p1 = vec![A::zero(); x.len()];
    let mut p2 = vec![A::zero(); x.len()];
    for &idx in order {
        let d = ctx.down(idx, &values[idx], &p1, &p2);
        let w = polygonal_through(&values[idx], &d, &(s1[idx].clone(), s2[idx].clone()));
        values[idx] = w.inv();
        let (a, b) = ctx.down(idx, &values[idx], &p1, &p2);
        p1[idx] = a;
        p2[idx] = b;
    }
    values
}

fn polygonal_backward<A: Semifield>(ctx: &Polygonal<'_>, x: &[A], order: &[usize]) -> Vec<A> {
    let (p1, p2) = ctx.all_down(x);
    let mut values = x.to_vec();
    let mut s1 = vec![A::zero(); x.len()];
    let mut s2 = vec![A::zero(); x.len()];
    for &idx in order.iter().rev() {
        let u = ctx.up(idx, &values[idx], &s1, &s2);
        let w = polygonal_through(&values[idx], &(p1[idx].clone(), p2[idx].clone()), &u);
        values[idx] = w.inv();
        let (a, b) = ctx.up(idx, &values[idx], &s1, &s2);
        s1[idx] = a;
        s2[idx] = b;
    }
    values
}

pub fn polygonal_rowmotion_with_order<A: Semifield>(x: &Labeling<A>, order: &[usize]) -> Result<Labeling<A>> {
    let ctx = Polygonal::new(x.poset())?;
    check_linear_extension(x.poset(), order)?;
    let values = polygonal_forward(&ctx, x.values(), order);
    Labeling::new(x.poset().clone(), values)
}

/// `ϱ̃^power`: polygonal toggles bottom-up; negative powers toggle top-down.
pub fn polygonal_rowmotion<A: Semifield>(x: &Labeling<A>, power: i64) -> Result<Labeling<A>> {
    let ctx = Polygonal::new(x.poset())?;
    let order = canonical_order(x.poset());
    let mut values = x.values().to_vec();
    for _ in 0..power.unsigned_abs() {
        values = if power > 0 {
            polygonal_forward(&ctx, &values, &order)
        } else {
            polygonal_backward(&ctx, &values, &order)
        };
    }
    Labeling::new(x.poset().clone(), values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Minimum,
    Maximum,
}

/// Relabels the unique minimum (resp. maximum) with `a1` and with `a2` and
/// compares `ρ̃⁻¹` (resp. `ρ̃`) of the two labelings away from the maximal
/// (resp. minimal) elements.
pub fn arbitrary_extremum_independence_check<A: Semifield>(
    x: &Labeling<A>,
    which: Extremum,
    a1: &A,
    a2: &A,
) -> Result<bool> {
    let poset = x.poset().clone();
    let (idx, skip) = match which {
        Extremum::Minimum => (poset.unique_minimum().ok_or(Error::NoUniqueExtremum("minimum"))?, poset.maximal()),
        Extremum::Maximum => (poset.unique_maximum().ok_or(Error::NoUniqueExtremum("maximum"))?, poset.minimal()),
    };
    let run = |a: &A| {
        let mut y = x.clone();
        y.set_value(idx, a.clone());
        match which {
            Extremum::Minimum => antichain_rowmotion_inverse_by_toggles(&y),
            Extremum::Maximum => antichain_rowmotion(&y, 1),
        }
    };
    let (z1, z2) = (run(a1), run(a2));
    Ok((0..poset.len()).filter(|n| !skip.contains(n)).all(|n| z1.value(n) == z2.value(n)))
}

/// Maps exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Toggle(Element),
    Rowmotion,
    AntichainToggle(Element),
    AntichainRowmotion,
    PolygonalToggle(Element),
    PolygonalRowmotion,
    Transfer,
    TransferInv,
    DualTransfer,
    DualTransferInv,
}

impl MapKind {
    /// Parses a command-line map name; toggles take an element.
    pub fn parse(name: &str, at: Option<Element>) -> Result<Self> {
        let need = || Error::InvalidLabeling(format!("map `{name}` needs an element"));
        Ok(match name {
            "rowmotion" => MapKind::Rowmotion,
            "antichain-rowmotion" => MapKind::AntichainRowmotion,
            "polygonal-rowmotion" => MapKind::PolygonalRowmotion,
            "transfer" => MapKind::Transfer,
            "transfer-inv" => MapKind::TransferInv,
            "dual-transfer" => MapKind::DualTransfer,
            "dual-transfer-inv" => MapKind::DualTransferInv,
            "toggle" => MapKind::Toggle(at.ok_or_else(need)?),
            "antichain-toggle" => MapKind::AntichainToggle(at.ok_or_else(need)?),
            "polygonal-toggle" => MapKind::PolygonalToggle(at.ok_or_else(need)?),
            other => return Err(Error::Parse { line: 0, message: format!("unknown map `{other}`") }),
        })
    }
}

/// Applies `kind` `power` times; negative powers apply the inverse.
pub fn apply_map<A: Semifield>(x: &Labeling<A>, kind: MapKind, power: i64) -> Result<Labeling<A>> {
    let repeat = |f: &dyn Fn(&Labeling<A>) -> Result<Labeling<A>>, n: u64| -> Result<Labeling<A>> {
        let mut cur = x.clone();
        for _ in 0..n {
            cur = f(&cur)?;
        }
        Ok(cur)
    };
    let n = power.unsigned_abs();
    let fwd = power >= 0;
    let dir = |a, b| if fwd { a } else { b };
    match kind {
        MapKind::Rowmotion => Ok(rowmotion(x, power)),
        MapKind::AntichainRowmotion => Ok(antichain_rowmotion(x, power)),
        MapKind::PolygonalRowmotion => polygonal_rowmotion(x, power),
        MapKind::Toggle(p) => repeat(&|y| toggle(y, p), n),
        MapKind::AntichainToggle(p) => repeat(&|y| antichain_toggle(y, p), n),
        MapKind::PolygonalToggle(p) => repeat(&|y| polygonal_toggle(y, p), n),
        MapKind::Transfer => {
            let d = dir(TransferDirection::Psi, TransferDirection::PsiInv);
            repeat(&|y| Ok(transfer(y, d)), n)
        }
        MapKind::TransferInv => {
            let d = dir(TransferDirection::PsiInv, TransferDirection::Psi);
            repeat(&|y| Ok(transfer(y, d)), n)
        }
        MapKind::DualTransfer => {
            let d = dir(TransferDirection::PsiStar, TransferDirection::PsiStarInv);
            repeat(&|y| Ok(transfer(y, d)), n)
        }
        MapKind::DualTransferInv => {
            let d = dir(TransferDirection::PsiStarInv, TransferDirection::PsiStar);
            repeat(&|y| Ok(transfer(y, d)), n)
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{random_labeling, Tropical};

    fn e(i: i32, j: i32) -> Element {
        Element::new(i, j)
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    fn chain2(a: Rational, b: Rational) -> Labeling<Rational> {
        let p = Arc::new(GridPoset::rectangle(2, 1).unwrap());
        Labeling::new(p, vec![a, b]).unwrap()
    }

    #[test]
    fn singleton_toggle() {
        let p = Arc::new(GridPoset::rectangle(1, 1).unwrap());
        let x = Labeling::new(p.clone(), vec![q(5, 3)]).unwrap();
        assert_eq!(toggle(&x, e(1, 1)).unwrap().values(), &[q(3, 5)]);
        let t = Labeling::new(p, vec![Tropical::from_integer(4)]).unwrap();
        assert_eq!(toggle(&t, e(1, 1)).unwrap().values(), &[Tropical::from_integer(-4)]);
    }

    #[test]
    fn chain_toggle_and_rowmotion() {
        let x = chain2(q(2, 1), q(3, 1));
        assert_eq!(toggle(&x, e(2, 1)).unwrap().at(e(2, 1)), &q(2, 3));
        assert_eq!(rowmotion(&x, 1).values(), &[q(1, 3), q(2, 3)]);
        assert_eq!(rowmotion(&x, 3), x);
        assert_eq!(rowmotion(&x, -1), rowmotion(&x, 2));
        assert!(toggle(&x, e(3, 3)).is_err());
    }

    #[test]
    fn rt32_transfer_on_ones() {
        let p = Arc::new(GridPoset::right_trapezoid(3, 2).unwrap());
        let x: Labeling<Rational> = Labeling::ones(p);
        let y = transfer(&x, TransferDirection::Psi);
        assert_eq!(y.at(e(2, 2)), &q(2, 1));
        assert_eq!(y.at(e(3, 2)), &q(3, 1));
        let z = antichain_rowmotion_inverse_by_toggles(&x);
        assert_eq!(z.at(e(2, 1)), &q(2, 3));
        assert_eq!(antichain_rowmotion_inverse_by_edgeweight(&x), z);
        assert!(dual_transfer_identity_check(&x));
    }

    #[test]
    fn inverse_contracts() {
        let p = Arc::new(GridPoset::right_trapezoid(4, 3).unwrap());
        for seed in 0..4 {
            let x: Labeling<Rational> = random_labeling(&p, seed);
            for d in [TransferDirection::Psi, TransferDirection::PsiStar] {
                let inv = if d == TransferDirection::Psi { TransferDirection::PsiInv } else { TransferDirection::PsiStarInv };
                assert_eq!(transfer(&transfer(&x, d), inv), x);
            }
            assert_eq!(rowmotion(&rowmotion(&x, 1), -1), x);
            assert_eq!(antichain_rowmotion(&antichain_rowmotion(&x, 1), -1), x);
            assert_eq!(antichain_rowmotion_inverse_by_toggles(&antichain_rowmotion(&x, 1)), x);
        }
    }

    #[test]
    fn antichain_toggle_matches_composite() {
        let p = Arc::new(GridPoset::rectangle(3, 3).unwrap());
        let x: Labeling<Rational> = random_labeling(&p, 11);
        let mut y = x.clone();
        for &c in p.cells() {
            y = antichain_toggle(&y, c).unwrap();
        }
        assert_eq!(y, antichain_rowmotion(&x, 1));
        let conj = transfer(&rowmotion(&transfer(&x, TransferDirection::Psi), 1), TransferDirection::PsiInv);
        assert_eq!(y, conj);
    }

    #[test]
    fn polygonal_equals_antichain_on_extremes() {
        for p in [GridPoset::rectangle(3, 3).unwrap(), GridPoset::trapezoid(3, 3).unwrap(), GridPoset::trapezoid(4, 2).unwrap()] {
            let p = Arc::new(p);
            let x: Labeling<Rational> = random_labeling(&p, 5);
            assert_eq!(polygonal_rowmotion(&x, 1).unwrap(), antichain_rowmotion(&x, 1));
        }
    }

    #[test]
    fn polygonal_rejects_other_kinds() {
        let p = Arc::new(GridPoset::right_trapezoid(3, 2).unwrap());
        let x: Labeling<Rational> = Labeling::ones(p);
        assert!(matches!(polygonal_rowmotion(&x, 1), Err(Error::WrongKind { .. })));
        assert!(matches!(partial_transfers(&x), Err(Error::WrongKind { .. })));
    }

    #[test]
    fn polygonal_toggles_compose() {
        let p = Arc::new(GridPoset::intermediate(4, 3, 2).unwrap());
        let x: Labeling<Rational> = random_labeling(&p, 2);
        let mut y = x.clone();
        for &c in p.cells() {
            y = polygonal_toggle(&y, c).unwrap();
        }
        assert_eq!(y, polygonal_rowmotion(&x, 1).unwrap());
        assert_eq!(polygonal_rowmotion(&y, -1).unwrap(), x);
    }

    #[test]
    fn extremum_independence() {
        let p = Arc::new(GridPoset::rectangle(3, 2).unwrap());
        let x: Labeling<Rational> = random_labeling(&p, 1);
        assert!(arbitrary_extremum_independence_check(&x, Extremum::Minimum, &q(1, 1), &q(7, 1)).unwrap());
        assert!(arbitrary_extremum_independence_check(&x, Extremum::Maximum, &q(1, 1), &q(7, 1)).unwrap());
        let t = Arc::new(GridPoset::trapezoid(3, 2).unwrap());
        let y: Labeling<Rational> = random_labeling(&t, 1);
        assert!(arbitrary_extremum_independence_check(&y, Extremum::Minimum, &q(1, 1), &q(2, 1)).is_err());
    }

    #[test]
    fn bad_linear_extension() {
        let p = Arc::new(GridPoset::rectangle(2, 2).unwrap());
        let x: Labeling<Rational> = Labeling::ones(p);
        assert!(rowmotion_with_order(&x, &[3, 2, 1, 0]).is_err());
        assert!(rowmotion_with_order(&x, &[0, 2, 1, 3]).is_ok());
    }
}
