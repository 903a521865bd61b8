//! Grid posets: rectangles, trapezoids, right trapezoids, the intermediate
//! posets interpolating between them, and general skew shapes.
//!
//! An element `(i, j)` is drawn with the first coordinate growing to the
//! northwest and the second to the northeast, so `(i, j) ⋖ (i + 1, j)` is a
//! northwest edge and `(i, j) ⋖ (i, j + 1)` a northeast edge. Every poset
//! here is an induced subposet of the grid whose Hasse diagram is a subgraph
//! of the grid's.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// A grid cell `(i, j)` with `i, j >= 1`.
///
/// Elements are ordered canonically by `(i + j, j)`, which is a linear
/// extension of every grid poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub i: i32,
    pub j: i32,
}

impl Element {
    pub const fn new(i: i32, j: i32) -> Self {
        Element { i, j }
    }

    pub fn rank(self) -> i32 {
        self.i + self.j - 2
    }

    /// Componentwise order of the grid.
    pub fn le(self, other: Element) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn offset(self, di: i32, dj: i32) -> Element {
        Element::new(self.i + di, self.j + dj)
    }

    fn key(self) -> (i32, i32) {
        (self.i + self.j, self.j)
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl From<(i32, i32)> for Element {
    fn from((i, j): (i32, i32)) -> Self {
        Element::new(i, j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetKind {
    Rectangle { r: u32, s: u32 },
    Trapezoid { r: u32, s: u32 },
    RightTrapezoid { r: u32, s: u32 },
    Intermediate { r: u32, s: u32, k: u32 },
    Skew,
    /// Any other saturated induced subposet of the grid, e.g. the window
    /// `[(k,1),(r+k,k+1)]` of a right trapezoid.
    Induced,
}

impl PosetKind {
    /// The `(r, s, k)` of the intermediate poset with the same cell set, if any.
    /// Rectangles are `I_1` and trapezoids are `I_s`.
    pub fn intermediate_params(self) -> Option<(u32, u32, u32)> {
        match self {
            PosetKind::Rectangle { r, s } => Some((r, s, 1)),
            PosetKind::Trapezoid { r, s } => Some((r, s, s)),
            PosetKind::Intermediate { r, s, k } => Some((r, s, k)),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            PosetKind::Rectangle { .. } => "rectangle",
            PosetKind::Trapezoid { .. } => "trapezoid",
            PosetKind::RightTrapezoid { .. } => "right-trapezoid",
            PosetKind::Intermediate { .. } => "intermediate",
            PosetKind::Skew => "skew",
            PosetKind::Induced => "induced",
        }
    }
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PosetKind::Rectangle { r, s }
            | PosetKind::Trapezoid { r, s }
            | PosetKind::RightTrapezoid { r, s } => write!(f, "{} {} {}", self.name(), r, s),
            PosetKind::Intermediate { r, s, k } => write!(f, "{} {} {} {}", self.name(), r, s, k),
            PosetKind::Skew | PosetKind::Induced => f.write_str(self.name()),
        }
    }
}

/// A finite saturated subposet of the grid with its cover relations.
#[derive(Clone, Debug)]
pub struct GridPoset {
    kind: PosetKind,
    /// `(r, s)` of the right trapezoid whose left border is meaningful here.
    ambient: Option<(u32, u32)>,
    cells: Vec<Element>,
    index: HashMap<Element, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl PartialEq for GridPoset {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.ambient == other.ambient && self.cells == other.cells
    }
}

impl Eq for GridPoset {}

fn check_dims(r: u32, s: u32) -> Result<()> {
    if s < 1 || r < s {
        return Err(Error::InvalidDimensions(format!("need r >= s >= 1, got r={r}, s={s}")));
    }
    Ok(())
}

fn right_trapezoid_cells(r: u32, s: u32) -> impl Iterator<Item = Element> {
    let (r, s) = (r as i32, s as i32);
    (1..=s).flat_map(move |j| (1..=r + s - 1).map(move |i| Element::new(i, j)))
        .filter(move |e| e.i - e.j < r)
}

impl GridPoset {
    pub fn new(kind: PosetKind) -> Result<Self> {
        match kind {
            PosetKind::Rectangle { r, s } => Self::rectangle(r, s),
            PosetKind::Trapezoid { r, s } => Self::trapezoid(r, s),
            PosetKind::RightTrapezoid { r, s } => Self::right_trapezoid(r, s),
            PosetKind::Intermediate { r, s, k } => Self::intermediate(r, s, k),
            PosetKind::Skew | PosetKind::Induced => Err(Error::WrongKind {
                expected: "a named kind with dimensions".into(),
                found: kind.to_string(),
            }),
        }
    }

    /// `R_{r,s} = [r] × [s]`.
    pub fn rectangle(r: u32, s: u32) -> Result<Self> {
        if r < 1 || s < 1 {
            return Err(Error::InvalidDimensions(format!("need r, s >= 1, got r={r}, s={s}")));
        }
        let cells = (1..=s as i32).flat_map(|j| (1..=r as i32).map(move |i| Element::new(i, j)));
        Self::from_cells(PosetKind::Rectangle { r, s }, Some((r, s)), cells)
    }

    /// `RT_{r,s} = {(i,j) ∈ [r+s-1] × [s] : i - j < r}`.
    pub fn right_trapezoid(r: u32, s: u32) -> Result<Self> {
        check_dims(r, s)?;
        Self::from_cells(PosetKind::RightTrapezoid { r, s }, Some((r, s)), right_trapezoid_cells(r, s))
    }

    /// `T_{r,s} = {(i,j) ∈ RT_{r,s} : i + j > s}`.
    pub fn trapezoid(r: u32, s: u32) -> Result<Self> {
        check_dims(r, s)?;
        let cells = right_trapezoid_cells(r, s).filter(move |e| e.i + e.j > s as i32);
        Self::from_cells(PosetKind::Trapezoid { r, s }, Some((r, s)), cells)
    }

    /// `I_{r,s,k} = T_{r,k} ∪ [(k,k+1),(r+k-1,s)]` inside `RT_{r,s}`.
    pub fn intermediate(r: u32, s: u32, k: u32) -> Result<Self> {
        check_dims(r, s)?;
        if k < 1 || k > s {
            return Err(Error::BadK { k, max: s });
        }
        let (ri, ki) = (r as i32, k as i32);
        let lower = right_trapezoid_cells(r, k).filter(move |e| e.i + e.j > ki);
        let upper = right_trapezoid_cells(r, s)
            .filter(move |e| e.i >= ki && e.i < ri + ki && e.j > ki);
        Self::from_cells(PosetKind::Intermediate { r, s, k }, Some((r, s)), lower.chain(upper))
    }

    /// Builds the induced subposet on `cells`, rejecting it unless its Hasse
    /// diagram is a subgraph of the grid's.
    pub fn from_cells(
        kind: PosetKind,
        ambient: Option<(u32, u32)>,
        cells: impl IntoIterator<Item = Element>,
    ) -> Result<Self> {
        let set: BTreeSet<Element> = cells.into_iter().collect();
        if let Some(bad) = set.iter().find(|e| e.i < 1 || e.j < 1) {
            return Err(Error::InvalidDimensions(format!("cell {bad} has a coordinate below 1")));
        }
        let cells: Vec<Element> = set.into_iter().collect();
        let index: HashMap<Element, usize> = cells.iter().enumerate().map(|(n, &e)| (e, n)).collect();
        let mut upper = vec![Vec::new(); cells.len()];
        let mut lower = vec![Vec::new(); cells.len()];
        for (n, &e) in cells.iter().enumerate() {
            for q in [e.offset(1, 0), e.offset(0, 1)] {
                if let Some(&m) = index.get(&q) {
                    upper[n].push(m);
                    lower[m].push(n);
                }
            }
        }
        for list in upper.iter_mut().chain(lower.iter_mut()) {
            list.sort_unstable();
        }
        let poset = GridPoset { kind, ambient, cells, index, upper, lower };
        poset.check_saturated()?;
        Ok(poset)
    }

    fn check_saturated(&self) -> Result<()> {
        for &p in &self.cells {
            for &q in &self.cells {
                if p == q || !p.le(q) || (q.i - p.i) + (q.j - p.j) == 1 {
                    continue;
                }
                let between = self.cells.iter().any(|&m| m != p && m != q && p.le(m) && m.le(q));
                if !between {
                    return Err(Error::NotSkew(format!(
                        "{p} < {q} is a cover of the induced subposet but not of the grid"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn ambient(&self) -> Option<(u32, u32)> {
        self.ambient
    }

    /// Same cells and covers under a different kind tag.
    pub fn retagged(&self, kind: PosetKind) -> GridPoset {
        GridPoset { kind, ..self.clone() }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in canonical order; positions in this slice are the element indices.
    pub fn cells(&self) -> &[Element] {
        &self.cells
    }

    pub fn element(&self, idx: usize) -> Element {
        self.cells[idx]
    }

    pub fn index_of(&self, e: Element) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.index.contains_key(&e)
    }

    pub fn upper_covers(&self, idx: usize) -> &[usize] {
        &self.upper[idx]
    }

    pub fn lower_covers(&self, idx: usize) -> &[usize] {
        &self.lower[idx]
    }

    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for (n, ups) in self.upper.iter().enumerate() {
            for &m in ups {
                out.push((self.cells[n], self.cells[m]));
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&n| self.lower[n].is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&n| self.upper[n].is_empty()).collect()
    }

    pub fn unique_minimum(&self) -> Option<usize> {
        match self.minimal().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn unique_maximum(&self) -> Option<usize> {
        match self.maximal().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// The left border `{(l + r - 1, l) : 1 <= l <= s}` of the ambient right trapezoid.
    pub fn left_border(&self) -> Result<Vec<Element>> {
        let (r, s) = self.ambient.ok_or_else(|| Error::WrongKind {
            expected: "a poset inside a right trapezoid".into(),
            found: self.kind.to_string(),
        })?;
        Ok((1..=s as i32).map(|l| Element::new(l + r as i32 - 1, l)).collect())
    }

    pub fn on_left_border(&self, e: Element) -> bool {
        match self.ambient {
            Some((r, s)) => e.i - e.j == r as i32 - 1 && e.j >= 1 && e.j <= s as i32,
            None => false,
        }
    }

    /// The element that polygonal chains may pass through instead of meeting
    /// the left border: `(k, 1)` for `I_k`.
    pub fn polygonal_anchor(&self) -> Option<Element> {
        self.kind.intermediate_params().map(|(_, _, k)| Element::new(k as i32, 1))
    }

    /// `se`, `sw`, `ne` and `nw` of `p`, relative to this poset.
    pub fn direction_sets(&self, p: Element) -> DirectionSets {
        let collect = |f: &dyn Fn(i32) -> Element, from: i32| -> Vec<Element> {
            let mut out = Vec::new();
            let mut t = from;
            loop {
                let e = f(t);
                if e.i < 1 || e.j < 1 {
                    break;
                }
                if self.contains(e) {
                    out.push(e);
                }
                t += 1;
            }
            out.sort();
            out
        };
        // se(p) = {(i-1-t, j+t) : t >= 0}, sw(p) = {(i-1+t, j-t) : t >= 1}.
        let se = collect(&|t| Element::new(p.i - 1 - t, p.j + t), 0);
        let sw = collect(&|t| Element::new(p.i - 1 + t, p.j - t), 1);
        // nw(p) = {q : p ∈ se(q)} = {(i+1+t, j-t)}, ne(p) = {q : p ∈ sw(q)} = {(i+1-t, j+t) : t >= 1}.
        let nw = collect(&|t| Element::new(p.i + 1 + t, p.j - t), 0);
        let ne = collect(&|t| Element::new(p.i + 1 - t, p.j + t), 1);
        DirectionSets { se, sw, ne, nw }
    }

    /// Enumerates the saturated chains of a family in lexicographic order.
    pub fn enumerate_chains(&self, family: &ChainFamily) -> Vec<Chain> {
        let starts: Vec<usize> = match family.min {
            Endpoint::At(m) => self.index_of(m).into_iter().collect(),
            Endpoint::Any => self.minimal(),
        };
        let end = match family.max {
            Endpoint::At(m) => match self.index_of(m) {
                Some(n) => Some(n),
                None => return Vec::new(),
            },
            Endpoint::Any => None,
        };
        let anchor = self.polygonal_anchor();
        let mut out = Vec::new();
        let mut path = Vec::new();
        for s in starts {
            self.extend_chains(s, end, family.constraint, &mut path, &mut out);
        }
        let mut chains: Vec<Chain> = out
            .into_iter()
            .filter(|c: &Vec<usize>| match family.constraint {
                SideConstraint::MeetsL => c.iter().any(|&n| self.on_left_border(self.cells[n])),
                SideConstraint::AvoidsL => !c.iter().any(|&n| self.on_left_border(self.cells[n])),
                SideConstraint::Polygonal => c.iter().any(|&n| {
                    let e = self.cells[n];
                    self.on_left_border(e) || Some(e) == anchor
                }),
                _ => true,
            })
            .map(|c| Chain { elements: c.into_iter().map(|n| self.cells[n]).collect() })
            .collect();
        chains.sort();
        chains
    }

    fn extend_chains(
        &self,
        node: usize,
        end: Option<usize>,
        constraint: SideConstraint,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let e = self.cells[node];
        if let Some(t) = end {
            if !e.le(self.cells[t]) {
                return;
            }
        }
        if !constraint.admits(self, e) {
            return;
        }
        path.push(node);
        let done = match end {
            Some(t) => node == t,
            None => self.upper[node].is_empty(),
        };
        if done {
            out.push(path.clone());
        } else {
            for &next in &self.upper[node] {
                self.extend_chains(next, end, constraint, path, out);
            }
        }
        path.pop();
    }

    /// Line format: a header (`rectangle r s`, `intermediate r s k`, `skew`, ...)
    /// followed by one `i j` line per cell in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.kind);
        for e in &self.cells {
            out.push_str(&format!("{} {}\n", e.i, e.j));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, message: "empty poset file".into() })?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let num = |idx: usize| -> Result<u32> {
            words
                .get(idx)
                .ok_or_else(|| Error::Parse { line: hline, message: format!("missing dimension {idx}") })?
                .parse::<u32>()
                .map_err(|e| Error::Parse { line: hline, message: e.to_string() })
        };
        let expected_len = |n: usize| -> Result<()> {
            if words.len() != n {
                return Err(Error::Parse { line: hline, message: format!("header `{header}` should have {n} fields") });
            }
            Ok(())
        };
        let mut cells = Vec::new();
        for (n, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let coords: std::result::Result<Vec<i32>, _> = parts.iter().map(|p| p.parse::<i32>()).collect();
            match coords {
                Ok(c) if c.len() == 2 => cells.push(Element::new(c[0], c[1])),
                _ => return Err(Error::Parse { line: n, message: format!("expected `i j`, got `{line}`") }),
            }
        }
        let named = |poset: Result<GridPoset>| -> Result<GridPoset> {
            let poset = poset?;
            if !cells.is_empty() {
                let given: BTreeSet<Element> = cells.iter().copied().collect();
                let actual: BTreeSet<Element> = poset.cells.iter().copied().collect();
                if given != actual {
                    return Err(Error::Parse { line: hline, message: "cell list does not match the header".into() });
                }
            }
            Ok(poset)
        };
        match words[0] {
            "rectangle" => {
                expected_len(3)?;
                named(Self::rectangle(num(1)?, num(2)?))
            }
            "trapezoid" => {
                expected_len(3)?;
                named(Self::trapezoid(num(1)?, num(2)?))
            }
            "right-trapezoid" => {
                expected_len(3)?;
                named(Self::right_trapezoid(num(1)?, num(2)?))
            }
            "intermediate" => {
                expected_len(4)?;
                named(Self::intermediate(num(1)?, num(2)?, num(3)?))
            }
            "skew" => {
                expected_len(1)?;
                Ok(SkewShape::build(cells)?.into_poset())
            }
            "induced" => {
                expected_len(1)?;
                Self::from_cells(PosetKind::Induced, None, cells)
            }
            other => Err(Error::Parse { line: hline, message: format!("unknown poset kind `{other}`") }),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DirectionSets {
    pub se: Vec<Element>,
    pub sw: Vec<Element>,
    pub ne: Vec<Element>,
    pub nw: Vec<Element>,
}

/// A saturated chain, listed from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    elements: Vec<Element>,
}

impl Chain {
    pub fn new(poset: &GridPoset, elements: Vec<Element>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidLabeling("empty chain".into()));
        }
        for e in &elements {
            if !poset.contains(*e) {
                return Err(Error::MissingElement(*e));
            }
        }
        for w in elements.windows(2) {
            let d = (w[1].i - w[0].i, w[1].j - w[0].j);
            if d != (1, 0) && d != (0, 1) {
                return Err(Error::InvalidLabeling(format!("{} ⋖ {} is not a cover", w[0], w[1])));
            }
        }
        Ok(Chain { elements })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn min(&self) -> Element {
        self.elements[0]
    }

    pub fn max(&self) -> Element {
        *self.elements.last().expect("chains are nonempty")
    }

    pub fn contains(&self, e: Element) -> bool {
        self.elements.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Cover relations `(lower, upper)` along the chain.
    pub fn edges(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.elements.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join("<"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    At(Element),
    /// Any minimal element (as a lower end) or any maximal element (as an upper end).
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideConstraint {
    None,
    /// Every element of the chain has a nonempty `se` set; likewise below.
    Se,
    Sw,
    Ne,
    Nw,
    MeetsL,
    AvoidsL,
    /// Meets the left border or passes through the intermediate poset's `(k,1)`.
    Polygonal,
}

impl SideConstraint {
    fn admits(self, poset: &GridPoset, e: Element) -> bool {
        let dirs = || poset.direction_sets(e);
        match self {
            SideConstraint::Se => !dirs().se.is_empty(),
            SideConstraint::Sw => !dirs().sw.is_empty(),
            SideConstraint::Ne => !dirs().ne.is_empty(),
            SideConstraint::Nw => !dirs().nw.is_empty(),
            _ => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainFamily {
    pub min: Endpoint,
    pub max: Endpoint,
    pub constraint: SideConstraint,
}

impl ChainFamily {
    pub fn between(min: Element, max: Element) -> Self {
        ChainFamily { min: Endpoint::At(min), max: Endpoint::At(max), constraint: SideConstraint::None }
    }

    pub fn maximal() -> Self {
        ChainFamily { min: Endpoint::Any, max: Endpoint::Any, constraint: SideConstraint::None }
    }

    pub fn polygonal() -> Self {
        ChainFamily::maximal().with(SideConstraint::Polygonal)
    }

    pub fn with(self, constraint: SideConstraint) -> Self {
        ChainFamily { constraint, ..self }
    }
}

/// A skew shape: a saturated subposet of `R_{r,s}` containing `(1,1)` and
/// `(r,s)` and closed under `(i-1,j),(i,j-1) ∈ S ⇒ (i,j) ∈ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    poset: GridPoset,
    r: i32,
    s: i32,
}

impl SkewShape {
    pub fn build(cells: impl IntoIterator<Item = Element>) -> Result<Self> {
        let poset = GridPoset::from_cells(PosetKind::Skew, None, cells).map_err(|e| match e {
            Error::NotSkew(m) => Error::NotSkew(m),
            other => Error::NotSkew(other.to_string()),
        })?;
        Self::from_poset(poset)
    }

    /// Skew Young diagram `λ/μ` (English notation); the bottom-left box becomes `(1,1)`.
    pub fn from_partitions(lambda: &[u32], mu: &[u32]) -> Result<Self> {
        let rows = lambda.len();
        if rows == 0 || mu.len() > rows {
            return Err(Error::NotSkew("λ must be nonempty and at least as long as μ".into()));
        }
        let mu_at = |a: usize| mu.get(a).copied().unwrap_or(0);
        if lambda.windows(2).any(|w| w[0] < w[1]) || mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSkew("partitions must be weakly decreasing".into()));
        }
        let shift = mu_at(rows - 1) as i32;
        let mut cells = Vec::new();
        for (a, &part) in lambda.iter().enumerate().take(rows) {
            for b in mu_at(a) + 1..=part {
                cells.push(Element::new((rows - a) as i32, b as i32 - shift));
            }
        }
        Self::build(cells)
    }

    /// Validates an existing poset as a skew shape, keeping its kind and ambient.
    pub fn from_poset(poset: GridPoset) -> Result<Self> {
        if poset.is_empty() {
            return Err(Error::NotSkew("empty cell set".into()));
        }
        let r = poset.cells.iter().map(|e| e.i).max().unwrap_or(0);
        let s = poset.cells.iter().map(|e| e.j).max().unwrap_or(0);
        if !poset.contains(Element::new(1, 1)) || !poset.contains(Element::new(r, s)) {
            return Err(Error::NotSkew(format!("must contain (1,1) and ({r},{s})")));
        }
        for &e in &poset.cells {
            for q in [e.offset(1, 1)] {
                if poset.contains(e.offset(1, 0)) && poset.contains(e.offset(0, 1)) && !poset.contains(q) {
                    return Err(Error::NotSkew(format!("closure fails at {q}")));
                }
            }
        }
        Ok(SkewShape { poset, r, s })
    }

    pub fn poset(&self) -> &GridPoset {
        &self.poset
    }

    pub fn into_poset(self) -> GridPoset {
        self.poset
    }

    /// `(r, s)` of the bounding rectangle.
    pub fn dims(&self) -> (i32, i32) {
        (self.r, self.s)
    }

    /// The shape rotated by a half turn: `(i, j) ↦ (r + 1 - i, s + 1 - j)`.
    pub fn rotated(&self) -> SkewShape {
        let cells = self.poset.cells.iter().map(|e| self.rotate(*e));
        SkewShape::build(cells).expect("a half-turn of a skew shape is a skew shape")
    }

    pub fn rotate(&self, e: Element) -> Element {
        Element::new(self.r + 1 - e.i, self.s + 1 - e.j)
    }

    pub fn corners(&self) -> CornerClassification {
        let has = |i: i32, j: i32| self.poset.contains(Element::new(i, j));
        let mut c = CornerClassification::default();
        for &e in &self.poset.cells {
            let (i, j) = (e.i, e.j);
            if has(i - 1, j) && has(i, j + 1) && !has(i + 1, j) && !has(i, j - 1) {
                c.left_outward.push(e);
            }
            if has(i + 1, j) && has(i, j - 1) && !has(i - 1, j) && !has(i, j + 1) {
                c.right_outward.push(e);
            }
            if has(i + 1, j) && has(i, j - 1) && !has(i + 1, j - 1) {
                c.left_inward.push(e);
            }
            if has(i - 1, j) && has(i, j + 1) && !has(i - 1, j + 1) {
                c.right_inward.push(e);
            }
        }
        c
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CornerClassification {
    pub left_outward: Vec<Element>,
    pub right_outward: Vec<Element>,
    pub left_inward: Vec<Element>,
    pub right_inward: Vec<Element>,
}

impl CornerClassification {
    pub fn outward(&self) -> Vec<Element> {
        let mut v: Vec<Element> = self.left_outward.iter().chain(&self.right_outward).copied().collect();
        v.sort();
        v.dedup();
        v
    }

    /// Inward corners as a multiset: a point that is both left and right
    /// inward appears twice.
    pub fn inward(&self) -> Vec<Element> {
        let mut v: Vec<Element> = self.left_inward.iter().chain(&self.right_inward).copied().collect();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i32, j: i32) -> Element {
        Element::new(i, j)
    }

    #[test]
    fn singleton_rectangle() {
        let p = GridPoset::rectangle(1, 1).unwrap();
        assert_eq!(p.cells(), &[e(1, 1)]);
        assert!(p.covers().is_empty());
    }

    #[test]
    fn right_trapezoid_4_3() {
        let p = GridPoset::right_trapezoid(4, 3).unwrap();
        assert_eq!(p.len(), 15);
        assert_eq!(p.left_border().unwrap(), vec![e(4, 1), e(5, 2), e(6, 3)]);
        assert_eq!(GridPoset::right_trapezoid(1, 1).unwrap().left_border().unwrap(), vec![e(1, 1)]);
        assert_eq!(GridPoset::right_trapezoid(3, 2).unwrap().left_border().unwrap(), vec![e(3, 1), e(4, 2)]);
    }

    #[test]
    fn invalid_dimensions() {
        assert!(matches!(GridPoset::trapezoid(2, 3), Err(Error::InvalidDimensions(_))));
        assert!(matches!(GridPoset::rectangle(0, 0), Err(Error::InvalidDimensions(_))));
        assert!(matches!(GridPoset::intermediate(3, 3, 4), Err(Error::BadK { .. })));
        assert!(matches!(GridPoset::intermediate(3, 3, 0), Err(Error::BadK { .. })));
    }

    #[test]
    fn intermediate_extremes_and_sizes() {
        for r in 1..=6u32 {
            for s in 1..=r {
                let rect: Vec<_> = GridPoset::rectangle(r, s).unwrap().cells().to_vec();
                let trap: Vec<_> = GridPoset::trapezoid(r, s).unwrap().cells().to_vec();
                assert_eq!(rect.len(), (r * s) as usize);
                assert_eq!(trap.len(), (r * s) as usize);
                for k in 1..=s {
                    let ik = GridPoset::intermediate(r, s, k).unwrap();
                    assert_eq!(ik.len(), (r * s) as usize, "|I_{k}| for r={r} s={s}");
                    for (p, q) in ik.covers() {
                        assert_eq!(q.rank(), p.rank() + 1);
                    }
                }
                assert_eq!(GridPoset::intermediate(r, s, 1).unwrap().cells(), rect.as_slice());
                assert_eq!(GridPoset::intermediate(r, s, s).unwrap().cells(), trap.as_slice());
            }
        }
    }

    #[test]
    fn intermediate_3_3_2_cells() {
        let p = GridPoset::intermediate(3, 3, 2).unwrap();
        let expected = [(2, 1), (1, 2), (3, 1), (2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (4, 3)];
        let mut want: Vec<Element> = expected.iter().map(|&(i, j)| e(i, j)).collect();
        want.sort();
        assert_eq!(p.cells(), want.as_slice());
        assert_eq!(p.enumerate_chains(&ChainFamily::polygonal()).len(), 6);
        assert_eq!(p.enumerate_chains(&ChainFamily::maximal()).len(), 8);
    }

    #[test]
    fn polygonal_chain_count_is_independent_of_k() {
        for r in 1..=5u32 {
            for s in 1..=r {
                let counts: Vec<usize> = (1..=s)
                    .map(|k| {
                        GridPoset::intermediate(r, s, k).unwrap().enumerate_chains(&ChainFamily::polygonal()).len()
                    })
                    .collect();
                assert!(counts.windows(2).all(|w| w[0] == w[1]), "r={r} s={s}: {counts:?}");
            }
        }
    }

    #[test]
    fn maximal_chains_of_small_posets() {
        let r22 = GridPoset::rectangle(2, 2).unwrap();
        assert_eq!(r22.enumerate_chains(&ChainFamily::maximal()).len(), 2);
        let rt = GridPoset::right_trapezoid(3, 2).unwrap();
        assert_eq!(rt.enumerate_chains(&ChainFamily::maximal()).len(), 3);
        let fam = ChainFamily::between(e(1, 2), e(4, 2)).with(SideConstraint::MeetsL);
        let chains = rt.enumerate_chains(&fam);
        assert_eq!(chains.len(), 1);
        let fam = ChainFamily::between(e(1, 1), e(3, 2)).with(SideConstraint::MeetsL);
        let chains = rt.enumerate_chains(&fam);
        assert_eq!(chains.len(), 1);
        assert!(chains[0].contains(e(3, 1)));
    }

    #[test]
    fn chain_order_is_lexicographic() {
        let p = GridPoset::rectangle(3, 3).unwrap();
        let chains = p.enumerate_chains(&ChainFamily::maximal());
        assert_eq!(chains.len(), 6);
        assert!(chains.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn direction_sets_basic() {
        let p = GridPoset::rectangle(2, 2).unwrap();
        assert_eq!(p.direction_sets(e(2, 1)).se, vec![e(1, 1)]);
        assert_eq!(p.direction_sets(e(1, 2)).sw, vec![e(1, 1)]);
        assert_eq!(p.direction_sets(e(1, 1)).nw, vec![e(2, 1)]);
        let d = p.direction_sets(e(1, 1));
        assert!(d.se.is_empty() && d.sw.is_empty());
    }

    #[test]
    fn direction_sets_partition_adjacent_ranks() {
        for poset in [
            GridPoset::right_trapezoid(4, 3).unwrap(),
            GridPoset::intermediate(4, 4, 2).unwrap(),
            GridPoset::trapezoid(5, 3).unwrap(),
        ] {
            for &p in poset.cells() {
                let d = poset.direction_sets(p);
                let mut below: Vec<Element> = d.se.iter().chain(&d.sw).copied().collect();
                below.sort();
                let want: Vec<Element> = poset.cells().iter().copied().filter(|q| q.rank() == p.rank() - 1).collect();
                assert_eq!(below, want);
                let mut above: Vec<Element> = d.ne.iter().chain(&d.nw).copied().collect();
                above.sort();
                let want: Vec<Element> = poset.cells().iter().copied().filter(|q| q.rank() == p.rank() + 1).collect();
                assert_eq!(above, want);
                // nw(p) = {q : p ∈ se(q)} and ne(p) = {q : p ∈ sw(q)}
                for &q in poset.cells() {
                    let dq = poset.direction_sets(q);
                    assert_eq!(d.nw.contains(&q), dq.se.contains(&p));
                    assert_eq!(d.ne.contains(&q), dq.sw.contains(&p));
                }
            }
        }
    }

    #[test]
    fn skew_shapes() {
        let rt = GridPoset::right_trapezoid(4, 3).unwrap();
        assert!(SkewShape::build(rt.cells().iter().copied()).is_ok());
        let s = SkewShape::build([e(1, 1), e(2, 1), e(2, 2)]).unwrap();
        let c = s.corners();
        assert!(c.outward().contains(&e(2, 1)));
        assert!(c.inward().contains(&e(2, 1)));
        assert!(matches!(SkewShape::build([e(1, 1), e(2, 2)]), Err(Error::NotSkew(_))));
        assert!(matches!(SkewShape::build([e(1, 1), e(2, 1), e(1, 2)]), Err(Error::NotSkew(_))));
    }

    #[test]
    fn rectangle_corners() {
        let s = SkewShape::from_poset(GridPoset::rectangle(2, 2).unwrap()).unwrap();
        let c = s.corners();
        assert_eq!(c.outward(), vec![e(2, 1), e(1, 2)]);
        assert!(c.inward().is_empty());
    }

    fn sample_shape() -> SkewShape {
        let rows: [(i32, i32, i32); 6] = [(1, 1, 3), (2, 1, 5), (3, 1, 5), (4, 1, 6), (5, 1, 6), (6, 3, 6)];
        let cells = rows.iter().flat_map(|&(j, lo, hi)| (lo..=hi).map(move |i| e(i, j)));
        SkewShape::build(cells).unwrap()
    }

    #[test]
    fn sample_shape_corners() {
        let c = sample_shape().corners();
        let mut out = vec![e(3, 1), e(5, 2), e(6, 4), e(1, 5), e(3, 6)];
        out.sort();
        let mut inw = vec![e(3, 2), e(5, 4), e(3, 5)];
        inw.sort();
        assert_eq!(c.outward(), out);
        assert_eq!(c.inward(), inw);
    }

    #[test]
    fn double_inward_corner_has_multiplicity_two() {
        // (2,2) is both left and right inward: (3,2),(2,1),(1,2),(2,3) present, (3,1),(1,3) absent.
        let cells = [e(1, 1), e(2, 1), e(1, 2), e(2, 2), e(3, 2), e(2, 3), e(3, 3)];
        let s = SkewShape::build(cells).unwrap();
        let inward = s.corners().inward();
        assert_eq!(inward.iter().filter(|&&x| x == e(2, 2)).count(), 2);
    }

    #[test]
    fn partitions_and_cells_agree() {
        // λ/μ = (3,3,2)/(1): rows of lengths 2,3,2 with the last row flush left.
        let s = SkewShape::from_partitions(&[3, 3, 2], &[1]).unwrap();
        assert_eq!(s.poset().len(), 7);
        assert_eq!(s.dims(), (3, 3));
        assert!(SkewShape::from_partitions(&[3, 1], &[2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = GridPoset::intermediate(4, 3, 2).unwrap();
        let q = GridPoset::parse(&p.to_text()).unwrap();
        assert_eq!(p, q);
        let skew = sample_shape().into_poset();
        assert_eq!(GridPoset::parse(&skew.to_text()).unwrap(), skew);
        assert!(GridPoset::parse("rectangle 2\n").is_err());
        assert!(GridPoset::parse("rectangle 2 2\n1 1\n").is_err());
        assert!(GridPoset::parse("blob 1 1\n").is_err());
    }
}
