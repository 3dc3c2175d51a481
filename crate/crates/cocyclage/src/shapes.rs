//! Compositions, partitions, box diagrams and shape-level operators.
//!
//! Rows of a diagram are indexed by positive integers counted downward, so
//! the box in column `i` of the top row is `(i, 1)`. The natural order lists
//! boxes row by row, left to right.

use crate::{Error, Result};

/// A composition: a finite sequence of positive parts.
///
/// Trailing zeros are dropped on construction; internal zeros are rejected.
/// The empty composition is the canonical size-0 value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl std::fmt::Debug for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InternalZero(parts));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row index, zero beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        debug_assert!(row >= 1);
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// 1-based index of the first maximal part, `None` when empty.
    pub fn first_max_row(&self) -> Option<usize> {
        let m = self.max_part();
        self.parts.iter().position(|&p| p == m).map(|i| i + 1)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Parts rise then fall.
    pub fn is_unimodal(&self) -> bool {
        let rise_end = self
            .parts
            .windows(2)
            .position(|w| w[0] > w[1])
            .map(|i| i + 1)
            .unwrap_or(self.parts.len());
        self.parts[rise_end.saturating_sub(1)..]
            .windows(2)
            .all(|w| w[0] >= w[1])
    }

    /// `(1^l)` shapes, including the empty one.
    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn contains(&self, b: BoxPos) -> bool {
        b.col >= 1 && b.row >= 1 && b.col <= self.part(b.row)
    }

    /// Comma-separated text, empty string for the empty composition.
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A composition with weakly decreasing parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.0.to_text())
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let c = Composition::new(parts)?;
        if !c.is_partition() {
            return Err(Error::NotPartition(c.parts));
        }
        Ok(Partition(c))
    }

    pub fn empty() -> Self {
        Partition(Composition::empty())
    }

    pub fn from_composition(c: Composition) -> Result<Self> {
        if !c.is_partition() {
            return Err(Error::NotPartition(c.parts));
        }
        Ok(Partition(c))
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.part(i)
    }

    pub fn first_part(&self) -> usize {
        self.0.part(1)
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn to_text(&self) -> String {
        self.0.to_text()
    }

    pub fn parse(s: &str) -> Result<Self> {
        Partition::from_composition(Composition::parse(s)?)
    }

    /// Drop the first (largest) part.
    fn drop_first(&self) -> Partition {
        Partition(Composition {
            parts: self.parts()[1..].to_vec(),
        })
    }
}

/// A box of a diagram, with 1-based column and row indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoxPos {
    pub col: usize,
    pub row: usize,
}

impl BoxPos {
    pub fn new(col: usize, row: usize) -> Self {
        BoxPos { col, row }
    }
}

/// A composition with one of its boxes split in two halves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AugmentedComposition {
    base: Composition,
    split: BoxPos,
}

impl AugmentedComposition {
    pub fn new(base: Composition, split: BoxPos) -> Result<Self> {
        if !base.contains(split) {
            return Err(Error::BoxOutsideDiagram {
                col: split.col,
                row: split.row,
            });
        }
        Ok(AugmentedComposition { base, split })
    }

    pub fn base(&self) -> &Composition {
        &self.base
    }

    pub fn split(&self) -> BoxPos {
        self.split
    }

    /// Total number of boxes, counting both halves of the split box.
    pub fn size(&self) -> usize {
        self.base.size() + 1
    }

    /// Natural-order label of the lower half `b_-` of the split box.
    pub fn split_label(&self) -> usize {
        box_label(&self.base, self.split)
    }
}

/// Either a plain or an augmented composition, as produced by `localshift`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CompOrAug {
    Comp(Composition),
    Aug(AugmentedComposition),
}

impl CompOrAug {
    pub fn size(&self) -> usize {
        match self {
            CompOrAug::Comp(c) => c.size(),
            CompOrAug::Aug(a) => a.size(),
        }
    }
}

/// All boxes of the diagram in natural order: top row first, left to right.
pub fn natural_order(alpha: &Composition) -> Vec<BoxPos> {
    let mut out = Vec::with_capacity(alpha.size());
    for (r, &len) in alpha.parts().iter().enumerate() {
        for c in 1..=len {
            out.push(BoxPos::new(c, r + 1));
        }
    }
    out
}

/// 1-based natural-order label of a box.
pub fn box_label(alpha: &Composition, b: BoxPos) -> usize {
    debug_assert!(alpha.contains(b));
    alpha.parts()[..b.row - 1].iter().sum::<usize>() + b.col
}

/// Box with the given 1-based natural-order label.
pub fn box_at_label(alpha: &Composition, label: usize) -> Result<BoxPos> {
    let mut rest = label;
    for (r, &len) in alpha.parts().iter().enumerate() {
        if rest <= len {
            return Ok(BoxPos::new(rest, r + 1));
        }
        rest -= len;
    }
    Err(Error::BoxOutsideDiagram { col: label, row: 0 })
}

/// The distance between two boxes `b < b2` in the natural order:
/// `row(b2) - row(b) - eps`, where `eps` is 1 exactly when
/// `col(b) >= col(b2)`.
pub fn distance(alpha: &Composition, b: BoxPos, b2: BoxPos) -> Result<usize> {
    if !alpha.contains(b) {
        return Err(Error::BoxOutsideDiagram { col: b.col, row: b.row });
    }
    if !alpha.contains(b2) {
        return Err(Error::BoxOutsideDiagram { col: b2.col, row: b2.row });
    }
    if box_label(alpha, b) >= box_label(alpha, b2) {
        return Err(Error::NotNaturalOrder);
    }
    let eps = usize::from(b.col >= b2.col);
    Ok(b2.row - b.row - eps)
}

/// Distance between the boxes with the given natural-order labels.
pub fn distance_labels(alpha: &Composition, a: usize, b: usize) -> Result<usize> {
    distance(alpha, box_at_label(alpha, a)?, box_at_label(alpha, b)?)
}

/// Sort the parts into a partition; the gravity map on shapes.
pub fn grav_shape(alpha: &Composition) -> Partition {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(Composition { parts })
}

/// Move the rightmost upper box to the end of the next row. Columns `(1^l)`
/// are fixed points. Ties in the maximal part resolve to the smallest row.
pub fn shift_shape(alpha: &Composition) -> Composition {
    if alpha.is_column() {
        return alpha.clone();
    }
    let j = alpha.first_max_row().expect("nonempty");
    let mut parts = alpha.parts().to_vec();
    parts[j - 1] -= 1;
    if j == parts.len() {
        parts.push(1);
    } else {
        parts[j] += 1;
    }
    Composition::new(parts).expect("shift preserves validity")
}

/// One local shifting step.
///
/// On a plain composition: remove the rightmost upper box and split the first
/// box of the next row. On an augmented composition: move the split one
/// column right while a next column exists in its row, otherwise close the
/// split and append a box to its right.
///
/// A plain column shape is rejected; a plain shape whose next row is empty
/// degenerates directly to `shift` of the shape (the split would close
/// immediately).
pub fn localshift_shape(x: &CompOrAug) -> Result<CompOrAug> {
    match x {
        CompOrAug::Comp(alpha) => {
            if alpha.is_column() {
                return Err(Error::LocalshiftOfColumn);
            }
            let j = alpha.first_max_row().expect("nonempty");
            let mut parts = alpha.parts().to_vec();
            parts[j - 1] -= 1;
            let base = Composition::new(parts)
                .map_err(|_| Error::LocalshiftOfColumn)?;
            if base.part(j + 1) == 0 {
                // No box to split in the next row: the single step is shift.
                return Ok(CompOrAug::Comp(shift_shape(alpha)));
            }
            Ok(CompOrAug::Aug(AugmentedComposition::new(
                base,
                BoxPos::new(1, j + 1),
            )?))
        }
        CompOrAug::Aug(aug) => {
            let b = aug.split();
            if aug.base().part(b.row) > b.col {
                Ok(CompOrAug::Aug(AugmentedComposition::new(
                    aug.base().clone(),
                    BoxPos::new(b.col + 1, b.row),
                )?))
            } else {
                let mut parts = aug.base().parts().to_vec();
                parts[b.row - 1] += 1;
                Ok(CompOrAug::Comp(Composition::new(parts)?))
            }
        }
    }
}

/// Iterate `localshift` `steps` times starting from a plain composition.
pub fn localshift_iter(alpha: &Composition, steps: usize) -> Result<CompOrAug> {
    let mut cur = CompOrAug::Comp(alpha.clone());
    for _ in 0..steps {
        cur = localshift_shape(&cur)?;
    }
    Ok(cur)
}

/// Strip maximal parts while the largest part of the shape equals the largest
/// remaining part of the weight; the first maximal part goes each round.
pub fn simp(alpha: &Composition, mu: &Partition) -> (Composition, Partition) {
    let mut beta = alpha.clone();
    let mut nu = mu.clone();
    while !nu.is_empty() && !beta.is_empty() && beta.max_part() == nu.first_part() {
        let j = beta.first_max_row().expect("nonempty");
        let mut parts = beta.parts().to_vec();
        parts.remove(j - 1);
        beta = Composition::new(parts).expect("removing a whole part keeps validity");
        nu = nu.drop_first();
    }
    (beta, nu)
}

/// The weighted shift: apply `simp`, then `shift` the shape.
pub fn wshift_shape(alpha: &Composition, mu: &Partition) -> (Composition, Partition) {
    let (beta, nu) = simp(alpha, mu);
    (shift_shape(&beta), nu)
}

/// Weighted shift with trailing reductions folded in: `simp(wshift(..))`.
///
/// Iterating this from `simp(alpha, mu)` reaches the same fixed point as the
/// plain weighted shift but does not spend an extra step on a final
/// reduction that is not followed by a proper shift, which is the counting
/// that the closed step formula uses.
pub fn wshift_reduced(alpha: &Composition, mu: &Partition) -> (Composition, Partition) {
    let (beta, nu) = wshift_shape(alpha, mu);
    simp(&beta, &nu)
}

/// Smallest `m` with `wshift^{m+1} = wshift^m` on the reduced chain.
pub fn m_mu_iterative(alpha: &Composition, mu: &Partition) -> usize {
    let mut cur = simp(alpha, mu);
    let mut m = 0usize;
    loop {
        let next = wshift_reduced(&cur.0, &cur.1);
        if next == cur {
            return m;
        }
        cur = next;
        m += 1;
    }
}

/// Closed formula for `m_mu((p))`:
/// `sum_i (i-1) mu_i + (p-|mu|)(p-|mu|+2 l(mu)-1)/2`.
pub fn m_mu_closed(p: usize, mu: &Partition) -> Result<usize> {
    let weight = mu.size();
    if weight > p {
        return Err(Error::WeightBiggerThanRow { mu: weight, p });
    }
    let reductions: usize = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| i * part)
        .sum();
    let rest = p - weight;
    Ok(reductions + rest * (rest + 2 * mu.len() - 1) / 2)
}

/// All partitions of `n` (weakly decreasing, largest part first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(Composition { parts: cur.clone() }));
            return;
        }
        for next in (1..=rest.min(max)).rev() {
            cur.push(next);
            rec(rest - next, next, cur, out);
            cur.pop();
        }
    }
    rec(n, n.max(1), &mut cur, &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_bounded(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// All compositions of `n`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for next in 1..=rest {
            cur.push(next);
            rec(rest - next, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}
