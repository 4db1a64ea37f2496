//! Divisors on a generic chain of loops.
//!
//! Loop `i` has a left vertex `v_i` and a right vertex `w_i` joined by two
//! edges: `m_i`, traversed first when going counterclockwise from `v_i`,
//! and `l_i`. A bridge joins `w_i` to `v_{i+1}`. Positions on loop `i` are
//! counterclockwise distances from `v_i`, taken modulo `l_i + m_i`.
//!
//! A `v_1`-reduced divisor of rank `r` has `r` chips at `v_1` and at most
//! one chip on each loop. Reading the loops from left to right gives a
//! lattice path in the open Weyl chamber: no chip on loop `i` is a step
//! `(-1, ..., -1)`; a chip at distance `(p_i(j) + 1) m_i` is a step `e_j`
//! when that keeps the path in the chamber; any other chip is a lingering
//! step. The cells of `W^r_d` are indexed by rectangular standard tableaux
//! with `r + 1` columns and `g - d + r` rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::break_divisors::is_reduced_everywhere;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::metric;
use crate::pl::PlFunction;
use crate::rank;
use crate::rational::{frac, int, modulo, Rational};

/// A chain of `g` loops with bridges.
#[derive(Debug, Clone)]
pub struct ChainOfLoops {
    l: Vec<Rational>,
    m: Vec<Rational>,
    bridges: Vec<Rational>,
    graph: MetricGraph,
}

fn primes(count: usize) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(count);
    let mut n = 2;
    while out.len() < count {
        if out.iter().all(|p| n % p != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

impl ChainOfLoops {
    /// `l` and `m` hold one length per loop, `bridges` one fewer.
    pub fn new(l: Vec<Rational>, m: Vec<Rational>, bridges: Vec<Rational>) -> Result<Self> {
        let g = l.len();
        if g == 0 || m.len() != g || bridges.len() + 1 != g {
            return Err(Error::validation(
                "a chain of g loops needs g lengths l, g lengths m and g - 1 bridges",
            ));
        }
        let mut names = Vec::with_capacity(2 * g);
        for i in 1..=g {
            names.push(format!("v{i}"));
            names.push(format!("w{i}"));
        }
        let mut edges = Vec::new();
        let mut lengths = Vec::new();
        for i in 0..g {
            edges.push((format!("m{}", i + 1), 2 * i, 2 * i + 1));
            lengths.push(m[i].clone());
            edges.push((format!("l{}", i + 1), 2 * i, 2 * i + 1));
            lengths.push(l[i].clone());
            if i + 1 < g {
                edges.push((format!("b{}", i + 1), 2 * i + 1, 2 * i + 2));
                lengths.push(bridges[i].clone());
            }
        }
        let graph = MetricGraph::new(FiniteGraph::with_names(names, edges)?, lengths)?;
        Ok(ChainOfLoops {
            l,
            m,
            bridges,
            graph,
        })
    }

    /// `l_i = 1`, `m_i = p_i / (2 g p_{i+1})` for the primes `p_1 < p_2 < ...`
    /// and unit bridges. The result is checked to be generic.
    pub fn generic(g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::validation("a chain needs at least one loop"));
        }
        let p = primes(g + 1);
        let m = (0..g)
            .map(|i| frac(p[i], 2 * g as i64 * p[i + 1]))
            .collect();
        let chain = Self::new(vec![int(1); g], m, vec![int(1); g - 1])?;
        if !chain.is_generic() {
            return Err(Error::Consistency(
                "default chain lengths are not generic".into(),
            ));
        }
        Ok(chain)
    }

    pub fn genus(&self) -> usize {
        self.l.len()
    }

    pub fn l(&self) -> &[Rational] {
        &self.l
    }

    pub fn m(&self) -> &[Rational] {
        &self.m
    }

    pub fn bridges(&self) -> &[Rational] {
        &self.bridges
    }

    pub fn graph(&self) -> &MetricGraph {
        &self.graph
    }

    /// `l_i / m_i` is not `p / q` with `p + q <= 2g - 2` on any loop. In
    /// lowest terms `a / b` this says `a + b > 2g - 2`.
    pub fn is_generic(&self) -> bool {
        let bound = BigInt::from(2 * self.genus() as i64 - 2);
        self.l.iter().zip(&self.m).all(|(l, m)| {
            let ratio = l / m;
            ratio.numer() + ratio.denom() > bound
        })
    }

    /// `v_{i+1}` for the 0-based loop index `i`.
    pub fn v(&self, i: usize) -> VertexId {
        VertexId(2 * i)
    }

    /// `w_{i+1}` for the 0-based loop index `i`.
    pub fn w(&self, i: usize) -> VertexId {
        VertexId(2 * i + 1)
    }

    pub fn circumference(&self, i: usize) -> Rational {
        &self.l[i] + &self.m[i]
    }

    fn m_edge(&self, i: usize) -> EdgeId {
        EdgeId(3 * i)
    }

    fn l_edge(&self, i: usize) -> EdgeId {
        EdgeId(3 * i + 1)
    }

    /// The point at counterclockwise distance `x` from `v_i` on loop `i`.
    pub fn point_on_loop(&self, i: usize, x: &Rational) -> GraphPoint {
        let c = self.circumference(i);
        let x = modulo(x, &c);
        if x.is_zero() {
            GraphPoint::Vertex(self.v(i))
        } else if x < self.m[i] {
            self.graph
                .point_on_edge(self.m_edge(i), x)
                .expect("inside the edge")
        } else if x == self.m[i] {
            GraphPoint::Vertex(self.w(i))
        } else {
            self.graph
                .point_on_edge(self.l_edge(i), &c - &x)
                .expect("inside the edge")
        }
    }

    /// Loop index and counterclockwise distance from `v_i` in `(0, l_i + m_i]`
    /// of a point on a loop, counting `v_i` as distance `l_i + m_i`. `None`
    /// for bridge interiors.
    pub fn loop_position(&self, p: &GraphPoint) -> Option<(usize, Rational)> {
        match p {
            GraphPoint::Vertex(v) if v.0 % 2 == 0 => Some((v.0 / 2, self.circumference(v.0 / 2))),
            GraphPoint::Vertex(v) => Some((v.0 / 2, self.m[v.0 / 2].clone())),
            GraphPoint::Edge { edge, offset } => {
                let i = edge.0 / 3;
                match edge.0 % 3 {
                    0 => Some((i, offset.clone())),
                    1 => Some((i, self.circumference(i) - offset)),
                    _ => None,
                }
            }
        }
    }

    /// `v_1, ..., v_g, w_g`, a rank-determining set.
    pub fn rank_determining_points(&self) -> Vec<GraphPoint> {
        let g = self.genus();
        (0..g)
            .map(|i| GraphPoint::Vertex(self.v(i)))
            .chain(std::iter::once(GraphPoint::Vertex(self.w(g - 1))))
            .collect()
    }

    pub fn rank(&self, d: &Divisor) -> Result<i64> {
        Ok(rank::rank_with_test_points(&self.graph, d, self.rank_determining_points())?.rank)
    }
}

/// One step of a lingering lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(-1, ..., -1)`: no chip on the loop.
    Down,
    /// `e_j`: a chip at the special distance for coordinate `j`.
    Up(usize),
    /// No change.
    Linger,
}

/// A path `p_1, ..., p_{g+1}` in `Z^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LingeringLatticePath {
    pub start: Vec<i64>,
    pub steps: Vec<Step>,
}

fn in_chamber(p: &[i64]) -> bool {
    p.windows(2).all(|w| w[0] > w[1]) && p.last().is_none_or(|&y| y > 0)
}

impl LingeringLatticePath {
    /// The path starting at `(r, r - 1, ..., 1)`.
    pub fn new(r: usize, steps: Vec<Step>) -> Self {
        LingeringLatticePath {
            start: (1..=r as i64).rev().collect(),
            steps,
        }
    }

    pub fn dimension(&self) -> usize {
        self.start.len()
    }

    /// All points `p_1, ..., p_{g+1}`.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut p = self.start.clone();
        let mut out = vec![p.clone()];
        for s in &self.steps {
            match s {
                Step::Down => p.iter_mut().for_each(|y| *y -= 1),
                Step::Up(j) => p[*j] += 1,
                Step::Linger => {}
            }
            out.push(p.clone());
        }
        out
    }

    /// Every point lies in the open Weyl chamber and every `Up` step names a
    /// coordinate.
    pub fn validate(&self) -> Result<()> {
        let r = self.dimension();
        if let Some(s) = self
            .steps
            .iter()
            .find(|s| matches!(s, Step::Up(j) if *j >= r))
        {
            return Err(Error::validation(format!(
                "step {s:?} exceeds dimension {r}"
            )));
        }
        if let Some(k) = self.points().iter().position(|p| !in_chamber(p)) {
            return Err(Error::validation(format!(
                "path leaves the Weyl chamber at point {}",
                k + 1
            )));
        }
        Ok(())
    }
}

/// A standard tableau on a rectangle whose entries are a subset of
/// `1..=g`, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau {
    pub genus: usize,
    pub columns: usize,
    pub rows: Vec<Vec<usize>>,
}

impl RectTableau {
    pub fn validate(&self) -> Result<()> {
        let mut seen = vec![false; self.genus + 1];
        for row in &self.rows {
            if row.len() != self.columns {
                return Err(Error::validation(
                    "tableau rows must all have the same length",
                ));
            }
            for &x in row {
                if x == 0 || x > self.genus || seen[x] {
                    return Err(Error::validation(format!(
                        "tableau entry {x} is out of range or repeated"
                    )));
                }
                seen[x] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::validation("tableau rows must increase"));
            }
        }
        for pair in self.rows.windows(2) {
            if pair[0].iter().zip(&pair[1]).any(|(a, b)| a >= b) {
                return Err(Error::validation("tableau columns must increase"));
            }
        }
        Ok(())
    }

    pub fn transpose(&self) -> RectTableau {
        RectTableau {
            genus: self.genus,
            columns: self.rows.len(),
            rows: (0..self.columns)
                .map(|j| self.rows.iter().map(|row| row[j]).collect())
                .collect(),
        }
    }

    /// Entries read row by row.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Column of entry `k`, if present.
    pub fn column_of(&self, k: usize) -> Option<usize> {
        self.rows
            .iter()
            .find_map(|row| row.iter().position(|&x| x == k))
    }
}

/// Moves in direction `e_j` go to column `j` and `(-1, ..., -1)` moves to
/// the last column; lingering steps are left out.
pub fn path_to_tableau(path: &LingeringLatticePath) -> Result<RectTableau> {
    path.validate()?;
    let r = path.dimension();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
    for (k, s) in path.steps.iter().enumerate() {
        match s {
            Step::Up(j) => columns[*j].push(k + 1),
            Step::Down => columns[r].push(k + 1),
            Step::Linger => {}
        }
    }
    let height = columns[r].len();
    if columns.iter().any(|c| c.len() != height) {
        return Err(Error::validation("path does not fill a rectangle"));
    }
    Ok(RectTableau {
        genus: path.steps.len(),
        columns: r + 1,
        rows: (0..height)
            .map(|t| columns.iter().map(|c| c[t]).collect())
            .collect(),
    })
}

pub fn tableau_to_path(t: &RectTableau) -> Result<LingeringLatticePath> {
    t.validate()?;
    if t.columns == 0 {
        return Err(Error::validation("a tableau needs at least one column"));
    }
    let r = t.columns - 1;
    let steps = (1..=t.genus)
        .map(|k| match t.column_of(k) {
            None => Step::Linger,
            Some(j) if j == r => Step::Down,
            Some(j) => Step::Up(j),
        })
        .collect();
    let path = LingeringLatticePath::new(r, steps);
    path.validate()?;
    Ok(path)
}

/// What a cell prescribes on one loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LoopChip {
    Empty,
    /// A chip at distance `multiple * m_i` from `v_i`.
    Fixed {
        multiple: i64,
    },
    /// A chip anywhere on the loop.
    Free,
}

/// A torus of `W^r_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub r: usize,
    pub degree: usize,
    pub tableau: RectTableau,
    pub path: LingeringLatticePath,
    pub loops: Vec<LoopChip>,
}

impl Cell {
    fn from_path(degree: usize, path: LingeringLatticePath) -> Result<Self> {
        let tableau = path_to_tableau(&path)?;
        let points = path.points();
        let loops = path
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| match s {
                Step::Down => LoopChip::Empty,
                Step::Up(j) => LoopChip::Fixed {
                    multiple: points[i][*j] + 1,
                },
                Step::Linger => LoopChip::Free,
            })
            .collect();
        Ok(Cell {
            r: path.dimension(),
            degree,
            tableau,
            path,
            loops,
        })
    }

    pub fn dimension(&self) -> usize {
        self.loops.iter().filter(|c| **c == LoopChip::Free).count()
    }
}

/// `rho = g - (r + 1)(g - d + r)`.
pub fn brill_noether_number(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

fn check_range(g: usize, r: usize, d: usize) -> Result<()> {
    if g == 0 {
        return Err(Error::validation("genus must be positive"));
    }
    if d > g + r {
        return Err(Error::validation(format!(
            "degree {d} exceeds g + r = {}; every class of that degree has rank d - g",
            g + r
        )));
    }
    Ok(())
}

/// All cells of `W^r_d` on a generic chain of `g` loops, ordered by the row
/// word of their tableaux. Empty when `rho < 0`.
pub fn enumerate_cells(g: usize, r: usize, d: usize) -> Result<Vec<Cell>> {
    check_range(g, r, d)?;
    let rho = brill_noether_number(g as i64, r as i64, d as i64);
    if rho < 0 {
        return Ok(Vec::new());
    }
    let height = g + r - d;
    let mut paths = Vec::new();
    let mut steps = Vec::with_capacity(g);
    let start: Vec<i64> = (1..=r as i64).rev().collect();
    extend(
        &start,
        &mut vec![0; r + 1],
        rho as usize,
        height,
        g,
        &mut steps,
        &mut paths,
    );
    let mut cells = paths
        .into_iter()
        .map(|s| Cell::from_path(d, LingeringLatticePath::new(r, s)))
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by_key(|a| a.tableau.row_word());
    Ok(cells)
}

fn extend(
    p: &[i64],
    counts: &mut Vec<usize>,
    lingers_left: usize,
    height: usize,
    g: usize,
    steps: &mut Vec<Step>,
    out: &mut Vec<Vec<Step>>,
) {
    if steps.len() == g {
        out.push(steps.clone());
        return;
    }
    let r = p.len();
    let mut try_step =
        |step: Step, column: Option<usize>, counts: &mut Vec<usize>, steps: &mut Vec<Step>| {
            let mut q = p.to_vec();
            match step {
                Step::Down => q.iter_mut().for_each(|y| *y -= 1),
                Step::Up(j) => q[j] += 1,
                Step::Linger => {}
            }
            if !in_chamber(&q) {
                return;
            }
            let lingers = lingers_left - usize::from(step == Step::Linger);
            if let Some(c) = column {
                counts[c] += 1;
            }
            steps.push(step);
            extend(&q, counts, lingers, height, g, steps, out);
            steps.pop();
            if let Some(c) = column {
                counts[c] -= 1;
            }
        };
    for j in 0..r {
        if counts[j] < height {
            try_step(Step::Up(j), Some(j), counts, steps);
        }
    }
    if counts[r] < height {
        try_step(Step::Down, Some(r), counts, steps);
    }
    if lingers_left > 0 {
        try_step(Step::Linger, None, counts, steps);
    }
}

/// Cell count from the closed formula and from enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCount {
    pub formula: BigInt,
    pub enumerated: usize,
}

fn factorial(n: usize) -> BigInt {
    (1..=n)
        .map(BigInt::from)
        .product::<BigInt>()
        .max(BigInt::one())
}

/// `C(g, rho) (g - rho)! prod_{i=0}^{r} i! / (g - d + r + i)!`, or 0 when
/// `rho < 0`.
pub fn cell_count_formula(g: usize, r: usize, d: usize) -> Result<BigInt> {
    check_range(g, r, d)?;
    let rho = brill_noether_number(g as i64, r as i64, d as i64);
    if rho < 0 {
        return Ok(BigInt::zero());
    }
    let rho = rho as usize;
    let height = g + r - d;
    let binom = factorial(g) / (factorial(rho) * factorial(g - rho));
    let mut num = binom * factorial(g - rho);
    let mut den = BigInt::one();
    for i in 0..=r {
        num *= factorial(i);
        den *= factorial(height + i);
    }
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "cell count formula is not an integer for g={g}, r={r}, d={d}"
        )));
    }
    Ok(q)
}

pub fn count_cells(g: usize, r: usize, d: usize) -> Result<CellCount> {
    let formula = cell_count_formula(g, r, d)?;
    let enumerated = enumerate_cells(g, r, d)?.len();
    if formula != BigInt::from(enumerated) {
        return Err(Error::Consistency(format!(
            "formula gives {formula} cells but enumeration finds {enumerated}"
        )));
    }
    Ok(CellCount {
        formula,
        enumerated,
    })
}

fn check_cell(chain: &ChainOfLoops, cell: &Cell) -> Result<()> {
    if cell.loops.len() != chain.genus() {
        return Err(Error::validation("cell and chain have different genus"));
    }
    Ok(())
}

/// Distances on loop `i` where a chip would not linger, plus the two
/// vertices.
fn special_positions(chain: &ChainOfLoops, i: usize, bound: i64) -> Vec<Rational> {
    let c = chain.circumference(i);
    let mut out: Vec<Rational> = (0..=bound)
        .map(|k| modulo(&(&chain.m[i] * int(k)), &c))
        .collect();
    out.push(chain.m[i].clone());
    out
}

/// A divisor of the cell with the free chips at the given distances.
pub fn cell_divisor(chain: &ChainOfLoops, cell: &Cell, free: &[Rational]) -> Result<Divisor> {
    check_cell(chain, cell)?;
    if free.len() != cell.dimension() {
        return Err(Error::validation(format!(
            "cell has {} free chips, got {} positions",
            cell.dimension(),
            free.len()
        )));
    }
    let mut d = Divisor::vertex(chain.v(0), cell.r as i64);
    let mut free = free.iter();
    for (i, chip) in cell.loops.iter().enumerate() {
        match chip {
            LoopChip::Empty => {}
            LoopChip::Fixed { multiple } => {
                d.add_at(chain.point_on_loop(i, &(&chain.m[i] * int(*multiple))), 1)
            }
            LoopChip::Free => d.add_at(chain.point_on_loop(i, free.next().expect("counted")), 1),
        }
    }
    Ok(d)
}

/// Free chips at random rational distances away from every special
/// position and from the loop vertices.
pub fn sample_cell<R: Rng>(chain: &ChainOfLoops, cell: &Cell, rng: &mut R) -> Result<Divisor> {
    check_cell(chain, cell)?;
    let bound = 2 * chain.genus() as i64 + cell.r as i64 + 2;
    let mut free = Vec::new();
    for (i, chip) in cell.loops.iter().enumerate() {
        if *chip != LoopChip::Free {
            continue;
        }
        let avoid = special_positions(chain, i, bound);
        let c = chain.circumference(i);
        let x = loop {
            let den = rng.gen_range(7..=97);
            let x = &c * frac(rng.gen_range(1..den), den);
            if !avoid.contains(&x) {
                break x;
            }
        };
        free.push(x);
    }
    cell_divisor(chain, cell, &free)
}

/// Whether a divisor drawn from a cell has rank exactly `r`.
pub fn rank_consistency(chain: &ChainOfLoops, cell: &Cell, sample: &Divisor) -> Result<bool> {
    if !chain.is_generic() {
        return Err(Error::precondition("chain of loops is not generic"));
    }
    check_cell(chain, cell)?;
    Ok(sample.degree() == cell.degree as i64 && chain.rank(sample)? == cell.r as i64)
}

/// Reads the lingering lattice path of rank `r` off the `v_1`-reduced form
/// of `d`. `None` when the path leaves the chamber or does not fill a
/// rectangle, i.e. when `d` lies in no cell of `W^r_d`.
pub fn classify(chain: &ChainOfLoops, d: &Divisor, r: usize) -> Result<Option<Cell>> {
    let g = chain.graph();
    d.validate(g)?;
    let v1 = GraphPoint::Vertex(chain.v(0));
    let reduced = metric::reduced_divisor(g, d, &v1);
    let d1 = reduced.get(&v1);
    if d1 != r as i64 || !reduced.is_effective() {
        return Ok(None);
    }
    let mut chips: BTreeMap<usize, Rational> = BTreeMap::new();
    for (p, n) in reduced.iter().filter(|(p, _)| **p != v1) {
        let Some((i, x)) = chain.loop_position(p) else {
            return Ok(None);
        };
        if n != 1 || chips.insert(i, x).is_some() {
            return Ok(None);
        }
    }
    let mut path = LingeringLatticePath::new(r, Vec::with_capacity(chain.genus()));
    let mut p = path.start.clone();
    for i in 0..chain.genus() {
        let step = match chips.get(&i) {
            None => Step::Down,
            Some(x) => {
                let c = chain.circumference(i);
                (0..r)
                    .find(|&j| {
                        let mut q = p.clone();
                        q[j] += 1;
                        modulo(&(&chain.m[i] * int(p[j] + 1)), &c) == *x && in_chamber(&q)
                    })
                    .map_or(Step::Linger, Step::Up)
            }
        };
        match step {
            Step::Down => p.iter_mut().for_each(|y| *y -= 1),
            Step::Up(j) => p[j] += 1,
            Step::Linger => {}
        }
        path.steps.push(step);
    }
    if path.validate().is_err() || path_to_tableau(&path).is_err() {
        return Ok(None);
    }
    Ok(Some(Cell::from_path(d.degree() as usize, path)?))
}

/// Tableau of a cell next to the tableau of the adjoint class `K - D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointCheck {
    pub tableau: RectTableau,
    pub adjoint: Option<RectTableau>,
}

impl AdjointCheck {
    pub fn is_transpose(&self) -> bool {
        self.adjoint.as_ref() == Some(&self.tableau.transpose())
    }
}

/// Classifies `K - D` for a divisor `D` drawn from `cell`.
pub fn adjoint_check(chain: &ChainOfLoops, cell: &Cell, sample: &Divisor) -> Result<AdjointCheck> {
    check_cell(chain, cell)?;
    let g = chain.genus() as i64;
    let adjoint_rank = g - cell.degree as i64 + cell.r as i64 - 1;
    if adjoint_rank < 0 {
        return Err(Error::domain("the adjoint class has negative rank"));
    }
    let k = chain.graph().canonical_divisor();
    let adjoint = classify(chain, &(&k - sample), adjoint_rank as usize)?;
    Ok(AdjointCheck {
        tableau: cell.tableau.clone(),
        adjoint: adjoint.map(|c| c.tableau),
    })
}

/// The representatives `D_i ~ D` with `D_i - i w_g - (r - i) v_1 >= 0`, and
/// functions `f_i` with `D_0 + div(f_i) = D_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexAvoiding {
    pub representatives: Vec<Divisor>,
    pub functions: Vec<PlFunction>,
}

pub fn vertex_avoiding_reps(chain: &ChainOfLoops, r: usize, d: &Divisor) -> Result<VertexAvoiding> {
    let g = chain.graph();
    d.validate(g)?;
    let v1 = GraphPoint::Vertex(chain.v(0));
    let wg = GraphPoint::Vertex(chain.w(chain.genus() - 1));
    let mut representatives = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let shift = Divisor::from_points([(wg.clone(), i as i64), (v1.clone(), (r - i) as i64)]);
        let rest = metric::reduced_divisor(g, &(d - &shift), &v1);
        if !rest.is_effective() {
            return Err(Error::domain(format!(
                "no representative contains {i} w_g + {} v_1; the rank is below {r}",
                r - i
            )));
        }
        if !is_reduced_everywhere(g, &rest)? {
            return Err(Error::domain(format!(
                "representative {i} is not unique; the divisor is not vertex-avoiding"
            )));
        }
        representatives.push(&rest + &shift);
    }
    let mut functions = Vec::with_capacity(r + 1);
    for di in &representatives {
        let red = metric::reduce(g, &(&representatives[0] - di), &v1)?;
        if !red.divisor.is_zero() {
            return Err(Error::Consistency(
                "representatives are not equivalent".into(),
            ));
        }
        functions.push(red.witness);
    }
    Ok(VertexAvoiding {
        representatives,
        functions,
    })
}
