//! Fillings of composition diagrams over the barred alphabet.
//!
//! A [`Letter`] is a nonzero integer; negative `-k` encodes the barred letter
//! below all unbarred ones, so the integer order realizes the alphabet order.
//! Entries are stored flat in the natural box order, which makes natural-ness
//! checks linear and lets algorithms address boxes by label.

use crate::shapes::{
    box_label, grav_shape, localshift_shape, natural_order, shift_shape, simp,
    AugmentedComposition, BoxPos, CompOrAug, Composition, Partition,
};
use crate::{Error, Result};

/// One symbol of the ordered alphabet: barred letters are negative integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i32) -> Result<Self> {
        if value == 0 {
            return Err(Error::ZeroLetter);
        }
        Ok(Letter(value))
    }

    pub fn value(&self) -> i32 {
        self.0
    }

    pub fn is_barred(&self) -> bool {
        self.0 < 0
    }

    /// The bar involution: `k` and `-k` swap.
    pub fn bar(&self) -> Letter {
        Letter(-self.0)
    }

    /// Absolute letter index, ignoring the bar.
    pub fn index(&self) -> u32 {
        self.0.unsigned_abs()
    }

    /// Unbarred letter `k`.
    pub fn unbarred(k: u32) -> Letter {
        Letter(k as i32)
    }

    /// Barred letter `k`.
    pub fn barred(k: u32) -> Letter {
        Letter(-(k as i32))
    }
}

impl std::fmt::Debug for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One column of a tableau together with the rows its boxes occupy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    /// 1-based column index.
    pub col: usize,
    /// Row of the topmost box; boxes occupy consecutive rows below it.
    pub top_row: usize,
    pub entries: Vec<Letter>,
}

impl Column {
    pub fn bottom_row(&self) -> usize {
        self.top_row + self.entries.len() - 1
    }
}

/// A filling of a composition diagram, entries flat in natural order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Composition,
    entries: Vec<Letter>,
}

impl std::fmt::Debug for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

impl Tableau {
    pub fn new(shape: Composition, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::EntryCountMismatch {
                entries: entries.len(),
                boxes: shape.size(),
            });
        }
        Ok(Tableau { shape, entries })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Composition::empty(),
            entries: Vec::new(),
        }
    }

    /// The unique candidate natural tableau: entries sorted into natural order.
    pub fn natural_fill(shape: Composition, mut entries: Vec<Letter>) -> Result<Self> {
        entries.sort_unstable();
        Tableau::new(shape, entries)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry_at(&self, b: BoxPos) -> Result<Letter> {
        if !self.shape.contains(b) {
            return Err(Error::BoxOutsideDiagram { col: b.col, row: b.row });
        }
        Ok(self.entries[box_label(&self.shape, b) - 1])
    }

    /// Entry at a 1-based natural-order label.
    pub fn entry_at_label(&self, label: usize) -> Letter {
        self.entries[label - 1]
    }

    /// Entries of row `r`, left to right.
    pub fn row(&self, r: usize) -> &[Letter] {
        let start: usize = self.shape.parts()[..r - 1].iter().sum();
        &self.entries[start..start + self.shape.part(r)]
    }

    /// The boxes of column `c` with their entries, top-down. Rows must be
    /// consecutive, which holds for the unimodal shapes this crate works with.
    pub fn column(&self, c: usize) -> Result<Column> {
        let rows: Vec<usize> = (1..=self.shape.len())
            .filter(|&r| self.shape.part(r) >= c)
            .collect();
        if rows.is_empty() {
            return Err(Error::BoxOutsideDiagram { col: c, row: 0 });
        }
        if rows.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(Error::InvalidShape(format!(
                "column {c} of {:?} is not contiguous",
                self.shape
            )));
        }
        let entries = rows
            .iter()
            .map(|&r| self.entry_at(BoxPos::new(c, r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Column {
            col: c,
            top_row: rows[0],
            entries,
        })
    }

    /// All columns, left to right.
    pub fn columns(&self) -> Result<Vec<Column>> {
        (1..=self.shape.max_part()).map(|c| self.column(c)).collect()
    }

    /// Rebuild a tableau from columns with explicit vertical offsets.
    pub fn from_columns(cols: &[Column]) -> Result<Self> {
        if cols.is_empty() {
            return Ok(Tableau::empty());
        }
        let depth = cols.iter().map(|c| c.bottom_row()).max().unwrap();
        let mut parts = vec![0usize; depth];
        for (i, c) in cols.iter().enumerate() {
            if c.col != i + 1 {
                return Err(Error::InvalidShape(format!(
                    "column index {} at position {}",
                    c.col,
                    i + 1
                )));
            }
            for r in c.top_row..=c.bottom_row() {
                if parts[r - 1] != c.col - 1 {
                    return Err(Error::InvalidShape(format!(
                        "column {} does not abut row {r}",
                        c.col
                    )));
                }
                parts[r - 1] = c.col;
            }
        }
        let shape = Composition::new(parts)
            .map_err(|_| Error::InvalidShape("row gap".into()))?;
        let mut entries = vec![None; shape.size()];
        for c in cols {
            for (k, &e) in c.entries.iter().enumerate() {
                let b = BoxPos::new(c.col, c.top_row + k);
                entries[box_label(&shape, b) - 1] = Some(e);
            }
        }
        let entries = entries
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidShape("unfilled box".into()))?;
        Tableau::new(shape, entries)
    }

    /// Weak increase along rows, strict increase down columns (adjacent boxes).
    pub fn is_semistandard(&self) -> bool {
        for b in natural_order(&self.shape) {
            let e = self.entry_at(b).unwrap();
            let right = BoxPos::new(b.col + 1, b.row);
            if self.shape.contains(right) && e > self.entry_at(right).unwrap() {
                return false;
            }
            let below = BoxPos::new(b.col, b.row + 1);
            if self.shape.contains(below) && e >= self.entry_at(below).unwrap() {
                return false;
            }
        }
        true
    }

    /// Entries weakly increase along the natural order.
    pub fn is_weakly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// Semistandard and weakly increasing in the natural order.
    pub fn is_natural(&self) -> bool {
        self.is_semistandard() && self.is_weakly_increasing()
    }

    /// Multiplicity vector of the letters `1..=max` of an unbarred tableau.
    pub fn weight_a(&self) -> Result<Composition> {
        if self.entries.iter().any(Letter::is_barred) {
            return Err(Error::BarredEntry);
        }
        let max = self.entries.iter().map(|l| l.index()).max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; max];
        for l in &self.entries {
            counts[l.index() as usize - 1] += 1;
        }
        Composition::new(counts)
    }

    /// North-eastern column word: columns right to left, each top-down.
    pub fn column_word_ne(&self) -> Vec<Letter> {
        let mut word = Vec::with_capacity(self.size());
        for c in (1..=self.shape.max_part()).rev() {
            for (r, &len) in self.shape.parts().iter().enumerate() {
                if len >= c {
                    word.push(self.entry_at(BoxPos::new(c, r + 1)).unwrap());
                }
            }
        }
        word
    }

    /// South-western row word: rows bottom to top, each left to right.
    pub fn row_word_sw(&self) -> Vec<Letter> {
        let mut word = Vec::with_capacity(self.size());
        for r in (1..=self.shape.len()).rev() {
            word.extend_from_slice(self.row(r));
        }
        word
    }

    /// Remove one box together with its entry. The resulting row lengths must
    /// still form a composition.
    pub fn with_box_removed(&self, b: BoxPos) -> Result<Tableau> {
        if !self.shape.contains(b) || self.shape.part(b.row) != b.col {
            return Err(Error::BoxOutsideDiagram { col: b.col, row: b.row });
        }
        let mut parts = self.shape.parts().to_vec();
        parts[b.row - 1] -= 1;
        let shape = Composition::new(parts)
            .map_err(|_| Error::InvalidShape("internal zero after removal".into()))?;
        let mut entries = self.entries.clone();
        entries.remove(box_label(&self.shape, b) - 1);
        Tableau::new(shape, entries)
    }

    /// Canonical text: rows joined by `;`, entries by `,`.
    pub fn to_text(&self) -> String {
        (1..=self.shape.len())
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut parts = Vec::new();
        let mut entries = Vec::new();
        for row in s.split(';') {
            let mut len = 0usize;
            for tok in row.split(',') {
                let v = tok
                    .trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
                entries.push(Letter::new(v)?);
                len += 1;
            }
            parts.push(len);
        }
        Tableau::new(Composition::new(parts)?, entries)
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Lift every column to the top, preserving the order of its entries.
pub fn grav_tableau(t: &Tableau) -> Tableau {
    let shape = grav_shape(t.shape());
    let mut entries = vec![None; shape.size()];
    for c in 1..=t.shape().max_part() {
        let col_entries: Vec<Letter> = (1..=t.shape().len())
            .filter(|&r| t.shape().part(r) >= c)
            .map(|r| t.entry_at(BoxPos::new(c, r)).unwrap())
            .collect();
        for (k, e) in col_entries.into_iter().enumerate() {
            let b = BoxPos::new(c, k + 1);
            entries[box_label(shape.as_composition(), b) - 1] = Some(e);
        }
    }
    let entries = entries.into_iter().map(Option::unwrap).collect();
    Tableau::new(shape.as_composition().clone(), entries).unwrap()
}

/// The natural tableau of shape `shift(shape)` with the same entries.
pub fn shift_tableau(t: &Tableau) -> Result<Tableau> {
    if !t.is_natural() {
        return Err(Error::NotNatural);
    }
    Tableau::natural_fill(shift_shape(t.shape()), t.entries().to_vec())
}

/// The weighted shift on natural tableaux of partition weight: rows of
/// maximal length are deleted while blocked, the remaining letters are
/// renumbered to consecutive values from 1, and the result refills naturally
/// on the shifted shape.
pub fn wshift_tableau(t: &Tableau, mu: &Partition) -> Result<Tableau> {
    if !t.is_natural() {
        return Err(Error::NotNatural);
    }
    if &t.weight_a()? != mu.as_composition() {
        return Err(Error::WeightNotPartition);
    }
    let mut shape = t.shape().clone();
    let mut nu = mu.clone();
    let mut entries = t.entries().to_vec();
    while !nu.is_empty() && !shape.is_empty() && shape.max_part() == nu.first_part() {
        // The deleted letters are the current 1's; naturality puts them in
        // the first maximal row.
        let count = nu.first_part();
        debug_assert!(entries[..count].iter().all(|l| l.value() == 1));
        entries.drain(..count);
        for l in entries.iter_mut() {
            *l = Letter::new(l.value() - 1)?;
        }
        let (s, n) = one_simp_round(&shape, &nu);
        shape = s;
        nu = n;
    }
    Tableau::natural_fill(shift_shape(&shape), entries)
}

fn one_simp_round(shape: &Composition, nu: &Partition) -> (Composition, Partition) {
    let j = shape.first_max_row().expect("nonempty");
    let mut parts = shape.parts().to_vec();
    parts.remove(j - 1);
    let rest = Partition::new(nu.parts()[1..].to_vec()).expect("suffix of a partition");
    (Composition::new(parts).unwrap(), rest)
}

/// A filling of an augmented composition diagram. The flat entry list places
/// the `b_-` entry immediately before the `b_+` entry of the split box.
#[derive(Clone, PartialEq, Eq)]
pub struct AugmentedTableau {
    shape: AugmentedComposition,
    entries: Vec<Letter>,
}

impl std::fmt::Debug for AugmentedTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

impl AugmentedTableau {
    pub fn new(shape: AugmentedComposition, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::EntryCountMismatch {
                entries: entries.len(),
                boxes: shape.size(),
            });
        }
        Ok(AugmentedTableau { shape, entries })
    }

    /// Assemble from the plus tableau, the split box and the minus entry.
    pub fn from_plus(plus: &Tableau, split: BoxPos, minus: Letter) -> Result<Self> {
        let shape = AugmentedComposition::new(plus.shape().clone(), split)?;
        let mut entries = plus.entries().to_vec();
        entries.insert(shape.split_label() - 1, minus);
        AugmentedTableau::new(shape, entries)
    }

    pub fn shape(&self) -> &AugmentedComposition {
        &self.shape
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry of the lower half `b_-` of the split box.
    pub fn minus_entry(&self) -> Letter {
        self.entries[self.shape.split_label() - 1]
    }

    /// Entry of the upper half `b_+` of the split box.
    pub fn plus_entry(&self) -> Letter {
        self.entries[self.shape.split_label()]
    }

    /// The induced tableau keeping the `b_-` entry at the split box.
    pub fn minus_tableau(&self) -> Tableau {
        let mut entries = self.entries.clone();
        entries.remove(self.shape.split_label());
        Tableau::new(self.shape.base().clone(), entries).unwrap()
    }

    /// The induced tableau keeping the `b_+` entry at the split box.
    pub fn plus_tableau(&self) -> Tableau {
        let mut entries = self.entries.clone();
        entries.remove(self.shape.split_label() - 1);
        Tableau::new(self.shape.base().clone(), entries).unwrap()
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// Plus tableau text with the split descriptor appended.
    pub fn to_text(&self) -> String {
        format!(
            "{}|split={},{},{}",
            self.plus_tableau().to_text(),
            self.shape.split().row,
            self.shape.split().col,
            self.minus_entry()
        )
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (tab, desc) = s
            .split_once("|split=")
            .ok_or_else(|| Error::Parse("missing |split= descriptor".into()))?;
        let plus = Tableau::parse(tab)?;
        let nums: Vec<i32> = desc
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad split field {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if nums.len() != 3 || nums[0] < 1 || nums[1] < 1 {
            return Err(Error::Parse("split descriptor needs row,col,entry".into()));
        }
        AugmentedTableau::from_plus(
            &plus,
            BoxPos::new(nums[1] as usize, nums[0] as usize),
            Letter::new(nums[2])?,
        )
    }
}

impl std::fmt::Display for AugmentedTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A plain or augmented tableau, as produced by the local operators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TabOrAug {
    Tab(Tableau),
    Aug(AugmentedTableau),
}

impl TabOrAug {
    pub fn entries(&self) -> &[Letter] {
        match self {
            TabOrAug::Tab(t) => t.entries(),
            TabOrAug::Aug(t) => t.entries(),
        }
    }

    pub fn expect_tab(self) -> Tableau {
        match self {
            TabOrAug::Tab(t) => t,
            TabOrAug::Aug(t) => panic!("expected a plain tableau, got {t:?}"),
        }
    }
}

/// Local shift on natural tableaux: the entries refill the locally shifted
/// shape in natural order.
pub fn localshift_tableau(t: &TabOrAug) -> Result<TabOrAug> {
    let (shape, mut entries) = match t {
        TabOrAug::Tab(t) => (CompOrAug::Comp(t.shape().clone()), t.entries().to_vec()),
        TabOrAug::Aug(t) => (CompOrAug::Aug(t.shape().clone()), t.entries().to_vec()),
    };
    entries.sort_unstable();
    match localshift_shape(&shape)? {
        CompOrAug::Comp(c) => Ok(TabOrAug::Tab(Tableau::new(c, entries)?)),
        CompOrAug::Aug(a) => Ok(TabOrAug::Aug(AugmentedTableau::new(a, entries)?)),
    }
}

/// Shape and weight bookkeeping of a reduction round, shared with `simp`.
pub fn simp_shape_of(t: &Tableau, mu: &Partition) -> (Composition, Partition) {
    simp(t.shape(), mu)
}
