//! Label algebras and labelings.
//!
//! Both algebras are semifields: exact positive rationals under `+`/`×`, and
//! the tropical semiring `(ℚ, max, +)`. Each carries an additive identity
//! that only appears as the value of an empty sum; inverting it is an error.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::{Chain, ChainFamily, Element, GridPoset};

pub trait Semifield: Clone + Debug + Display + PartialEq + Eq + Send + Sync + 'static {
    /// Name used on the command line.
    const NAME: &'static str;

    /// The additive identity (empty-sum sentinel).
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn checked_inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;
    /// Whether this value may appear as an input label.
    fn is_admissible(&self) -> bool;
    fn from_integer(n: i64) -> Self;
    /// A random label from the algebra's default range.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
    fn parse(text: &str) -> Result<Self>;

    /// Panics on the additive identity.
    fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of the additive identity")
    }

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        items.into_iter().fold(Self::zero(), |acc, v| acc.add(v))
    }

    fn product<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        items.into_iter().fold(Self::one(), |acc, v| acc.mul(v))
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse { line: 0, message: format!("bad number `{text}`") };
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(text).map_err(|_| bad())?)),
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Exact rational; input labels are strictly positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(p: i64, q: i64) -> Self {
        Rational(BigRational::new(p.into(), q.into()))
    }

    /// Field subtraction, kept off the semifield interface.
    pub fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }

    pub fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.0, f)
    }
}

impl Semifield for Rational {
    const NAME: &'static str = "rational";

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }

    fn checked_inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::DivisionBySentinel)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_admissible(&self) -> bool {
        self.0.is_positive()
    }

    fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let p: i64 = rng.gen_range(1..=20);
        let q: i64 = rng.gen_range(1..=20);
        Rational::new(p, q)
    }

    fn parse(text: &str) -> Result<Self> {
        parse_rational(text).map(Rational)
    }
}

/// `(ℚ ∪ {−∞}, max, +)`. `NegInfinity` is the empty-sum sentinel.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tropical {
    NegInfinity,
    Finite(BigRational),
}

impl Tropical {
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            Tropical::Finite(v) => Some(v),
            Tropical::NegInfinity => None,
        }
    }

    /// The integer value, if finite and integral.
    pub fn to_integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        match self {
            Tropical::Finite(v) if v.is_integer() => v.to_integer().to_i64(),
            _ => None,
        }
    }
}

impl PartialOrd for Tropical {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tropical {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Tropical::NegInfinity, Tropical::NegInfinity) => Equal,
            (Tropical::NegInfinity, _) => Less,
            (_, Tropical::NegInfinity) => Greater,
            (Tropical::Finite(a), Tropical::Finite(b)) => a.cmp(b),
        }
    }
}

impl Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::NegInfinity => f.write_str("-inf"),
            Tropical::Finite(v) => fmt_rational(v, f),
        }
    }
}

impl Semifield for Tropical {
    const NAME: &'static str = "tropical";

    fn zero() -> Self {
        Tropical::NegInfinity
    }

    fn one() -> Self {
        Tropical::Finite(BigRational::zero())
    }

    fn add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a + b),
            _ => Tropical::NegInfinity,
        }
    }

    fn checked_inv(&self) -> Result<Self> {
        match self {
            Tropical::Finite(a) => Ok(Tropical::Finite(-a)),
            Tropical::NegInfinity => Err(Error::DivisionBySentinel),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Tropical::NegInfinity)
    }

    fn is_admissible(&self) -> bool {
        !self.is_zero()
    }

    fn from_integer(n: i64) -> Self {
        Tropical::Finite(BigRational::from_integer(n.into()))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Tropical::from_integer(rng.gen_range(-5..=5))
    }

    fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "-inf" => Ok(Tropical::NegInfinity),
            t => parse_rational(t).map(Tropical::Finite),
        }
    }
}

/// A value for every element of a poset, indexed canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling<A> {
    poset: Arc<GridPoset>,
    values: Vec<A>,
}

impl<A: Semifield> Labeling<A> {
    pub fn new(poset: Arc<GridPoset>, values: Vec<A>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::InvalidLabeling(format!(
                "{} values for a poset with {} elements",
                values.len(),
                poset.len()
            )));
        }
        Ok(Labeling { poset, values })
    }

    pub fn from_fn(poset: Arc<GridPoset>, mut f: impl FnMut(Element) -> A) -> Self {
        let values = poset.cells().iter().map(|&e| f(e)).collect();
        Labeling { poset, values }
    }

    pub fn constant(poset: Arc<GridPoset>, value: A) -> Self {
        Self::from_fn(poset, |_| value.clone())
    }

    pub fn ones(poset: Arc<GridPoset>) -> Self {
        Self::constant(poset, A::one())
    }

    /// Same values on an identical cell set carrying another tag.
    pub fn on(&self, poset: Arc<GridPoset>) -> Result<Self> {
        if poset.cells() != self.poset.cells() {
            return Err(Error::InvalidLabeling("cell sets differ".into()));
        }
        Ok(Labeling { poset, values: self.values.clone() })
    }

    pub fn poset(&self) -> &Arc<GridPoset> {
        &self.poset
    }

    pub fn values(&self) -> &[A] {
        &self.values
    }

    pub fn into_values(self) -> Vec<A> {
        self.values
    }

    pub fn value(&self, idx: usize) -> &A {
        &self.values[idx]
    }

    pub fn set_value(&mut self, idx: usize, v: A) {
        self.values[idx] = v;
    }

    pub fn get(&self, e: Element) -> Option<&A> {
        self.poset.index_of(e).map(|n| &self.values[n])
    }

    /// Panics if `e` is not in the poset.
    pub fn at(&self, e: Element) -> &A {
        self.get(e).unwrap_or_else(|| panic!("{e} is not in the poset"))
    }

    pub fn set(&mut self, e: Element, v: A) -> Result<()> {
        let n = self.poset.index_of(e).ok_or(Error::MissingElement(e))?;
        self.values[n] = v;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, &A)> {
        self.poset.cells().iter().copied().zip(self.values.iter())
    }

    pub fn map<B: Semifield>(&self, f: impl Fn(&A) -> B) -> Labeling<B> {
        Labeling { poset: self.poset.clone(), values: self.values.iter().map(f).collect() }
    }

    /// Rejects sentinel or (for rationals) nonpositive input values.
    pub fn validate(&self) -> Result<()> {
        for (e, v) in self.iter() {
            if !v.is_admissible() {
                return Err(Error::InvalidLabeling(format!("label {v} at {e} is not admissible")));
            }
        }
        Ok(())
    }

    /// One `i j value` line per element, canonical order.
    pub fn to_text(&self) -> String {
        self.iter().map(|(e, v)| format!("{} {} {}\n", e.i, e.j, v)).collect()
    }

    /// Parses `i j value` lines; every element must be given exactly once.
    pub fn parse(poset: Arc<GridPoset>, text: &str) -> Result<Self> {
        let mut values: Vec<Option<A>> = vec![None; poset.len()];
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let err = |message: String| Error::Parse { line: n + 1, message };
            if parts.len() != 3 {
                return Err(err(format!("expected `i j value`, got `{line}`")));
            }
            let i: i32 = parts[0].parse().map_err(|_| err(format!("bad coordinate `{}`", parts[0])))?;
            let j: i32 = parts[1].parse().map_err(|_| err(format!("bad coordinate `{}`", parts[1])))?;
            let e = Element::new(i, j);
            let idx = poset.index_of(e).ok_or_else(|| err(format!("{e} is not in the poset")))?;
            let v = A::parse(parts[2]).map_err(|_| err(format!("bad value `{}`", parts[2])))?;
            if values[idx].replace(v).is_some() {
                return Err(err(format!("{e} labeled twice")));
            }
        }
        let mut out = Vec::with_capacity(values.len());
        for (idx, v) in values.into_iter().enumerate() {
            out.push(v.ok_or_else(|| Error::InvalidLabeling(format!("{} has no label", poset.element(idx))))?);
        }
        Ok(Labeling { poset, values: out })
    }
}

/// Deterministic random labeling, drawn in canonical order from a ChaCha8 stream.
pub fn random_labeling<A: Semifield>(poset: &Arc<GridPoset>, seed: u64) -> Labeling<A> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Labeling::from_fn(poset.clone(), |_| A::random(&mut rng))
}

/// `∏_{p ∈ S} x_p`.
pub fn subset_weight<A: Semifield>(x: &Labeling<A>, subset: &[Element]) -> Result<A> {
    let mut acc = A::one();
    for &e in subset {
        acc = acc.mul(x.get(e).ok_or(Error::MissingElement(e))?);
    }
    Ok(acc)
}

pub fn chain_weight<A: Semifield>(x: &Labeling<A>, chain: &Chain) -> A {
    subset_weight(x, chain.elements()).expect("chain elements belong to the poset")
}

pub fn chains_weight<A: Semifield>(x: &Labeling<A>, chains: &[Chain]) -> A {
    chains.iter().fold(A::zero(), |acc, c| acc.add(&chain_weight(x, c)))
}

/// `Σ_{C ∈ F} w_C(x)`.
pub fn family_weight<A: Semifield>(x: &Labeling<A>, family: &ChainFamily) -> A {
    chains_weight(x, &x.poset().enumerate_chains(family))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt32() -> Arc<GridPoset> {
        Arc::new(GridPoset::right_trapezoid(3, 2).unwrap())
    }

    #[test]
    fn rational_basics() {
        let a = Rational::new(2, 4);
        assert_eq!(a.to_string(), "1/2");
        assert_eq!(a.mul(&a.inv()), Rational::one());
        assert_eq!(Rational::zero().checked_inv(), Err(Error::DivisionBySentinel));
        assert_eq!(Rational::parse("6/-4").unwrap(), Rational::new(-3, 2));
        assert_eq!(Rational::new(-3, 2).to_string(), "-3/2");
        assert!(Rational::parse("1/0").is_err());
    }

    #[test]
    fn tropical_basics() {
        let a = Tropical::from_integer(3);
        let b = Tropical::from_integer(-2);
        assert_eq!(a.add(&b), a);
        assert_eq!(a.mul(&b), Tropical::from_integer(1));
        assert_eq!(a.inv(), Tropical::from_integer(-3));
        assert_eq!(Tropical::zero().add(&b), b);
        assert_eq!(Tropical::one(), Tropical::from_integer(0));
        assert!(Tropical::zero().checked_inv().is_err());
        assert_eq!(Tropical::parse("-inf").unwrap(), Tropical::NegInfinity);
    }

    #[test]
    fn empty_weights() {
        let x: Labeling<Rational> = Labeling::ones(rt32());
        assert_eq!(subset_weight(&x, &[]).unwrap(), Rational::one());
        let t: Labeling<Tropical> = Labeling::ones(rt32());
        assert_eq!(subset_weight(&t, &[]).unwrap(), Tropical::from_integer(0));
        assert_eq!(chains_weight(&x, &[]), Rational::zero());
        assert_eq!(chains_weight(&t, &[]), Tropical::NegInfinity);
    }

    #[test]
    fn weights_on_ones() {
        let p = rt32();
        let x: Labeling<Rational> = Labeling::ones(p.clone());
        assert_eq!(subset_weight(&x, p.cells()).unwrap(), Rational::one());
        assert!(subset_weight(&x, &[Element::new(9, 9)]).is_err());
        let chains = vec![
            Chain::new(&p, vec![Element::new(2, 1), Element::new(3, 1), Element::new(3, 2)]).unwrap(),
            Chain::new(&p, vec![Element::new(2, 1), Element::new(2, 2), Element::new(3, 2)]).unwrap(),
        ];
        assert_eq!(chains_weight(&x, &chains), Rational::from_integer(2));
        let n = p.enumerate_chains(&ChainFamily::maximal()).len() as i64;
        assert_eq!(family_weight(&x, &ChainFamily::maximal()), Rational::from_integer(n));
    }

    #[test]
    fn random_labelings() {
        let p = Arc::new(GridPoset::rectangle(3, 3).unwrap());
        let a: Labeling<Rational> = random_labeling(&p, 7);
        assert_eq!(a, random_labeling(&p, 7));
        assert_ne!(a, random_labeling(&p, 8));
        a.validate().unwrap();
        let t: Labeling<Tropical> = random_labeling(&p, 7);
        assert!(t.values().iter().all(|v| (-5..=5).contains(&v.to_integer().unwrap())));
    }

    #[test]
    fn text_round_trip() {
        let p = Arc::new(GridPoset::trapezoid(4, 3).unwrap());
        let a: Labeling<Rational> = random_labeling(&p, 3);
        assert_eq!(Labeling::parse(p.clone(), &a.to_text()).unwrap(), a);
        let t: Labeling<Tropical> = random_labeling(&p, 3);
        assert_eq!(Labeling::parse(p.clone(), &t.to_text()).unwrap(), t);
        assert!(Labeling::<Rational>::parse(p.clone(), "3 2 1\n").is_err());
        assert!(Labeling::<Rational>::parse(p, "1 1 1\n").is_err());
    }

    #[test]
    fn validation_rejects_nonpositive() {
        let mut x: Labeling<Rational> = Labeling::ones(rt32());
        x.set(Element::new(1, 1), Rational::new(-1, 2)).unwrap();
        assert!(x.validate().is_err());
    }
}
