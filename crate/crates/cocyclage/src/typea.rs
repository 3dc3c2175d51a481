//! Charge and cocyclage over the unbarred alphabet.
//!
//! Charge follows the standard-subword recursion on south-western row words;
//! cocyclage moves the first letter of the north-eastern column word to a
//! column insertion after plactic reconstruction of the rest.

use crate::shapes::Composition;
use crate::tableaux::{Column, Letter, Tableau};
use crate::{Error, Result};

fn positive_values(word: &[Letter]) -> Result<Vec<u32>> {
    if word.iter().any(Letter::is_barred) {
        return Err(Error::BarredEntry);
    }
    Ok(word.iter().map(Letter::index).collect())
}

/// Charge of a standard word: `c(1) = 0`, and `c(r)` increments over
/// `c(r-1)` exactly when `r` sits to the right of `r-1`.
pub fn charge_standard(word: &[Letter]) -> Result<u64> {
    let vals = positive_values(word)?;
    let n = vals.len() as u32;
    let mut pos = vec![usize::MAX; n as usize + 1];
    for (i, &v) in vals.iter().enumerate() {
        if v == 0 || v > n || pos[v as usize] != usize::MAX {
            return Err(Error::NotStandardWord);
        }
        pos[v as usize] = i;
    }
    let mut total = 0u64;
    let mut c = 0u64;
    for r in 2..=n as usize {
        if pos[r] > pos[r - 1] {
            c += 1;
        }
        total += c;
    }
    Ok(total)
}

/// Split a word of weakly decreasing letter multiplicities into its standard
/// subwords by the rightmost-selection rule.
pub fn extract_standard_subwords(word: &[Letter]) -> Result<Vec<Vec<Letter>>> {
    let vals = positive_values(word)?;
    let max = vals.iter().copied().max().unwrap_or(0) as usize;
    let mut mult = vec![0usize; max + 1];
    for &v in &vals {
        mult[v as usize] += 1;
    }
    if (2..=max).any(|v| mult[v] > mult[v - 1]) {
        return Err(Error::MultiplicityCondition);
    }

    let mut used = vec![false; vals.len()];
    let mut remaining = vals.len();
    let mut subwords = Vec::new();
    while remaining > 0 {
        let avail = |used: &[bool], v: u32, below: usize| {
            (0..below)
                .rev()
                .find(|&i| !used[i] && vals[i] == v)
        };
        let top = (0..vals.len())
            .filter(|&i| !used[i])
            .map(|i| vals[i])
            .max()
            .unwrap();
        let mut picked = Vec::new();
        let mut cur = avail(&used, 1, vals.len()).ok_or(Error::MultiplicityCondition)?;
        used[cur] = true;
        picked.push(cur);
        for v in 2..=top {
            // Rightmost v left of the current pick, else rightmost v overall.
            let next = avail(&used, v, cur)
                .or_else(|| avail(&used, v, vals.len()))
                .ok_or(Error::MultiplicityCondition)?;
            used[next] = true;
            picked.push(next);
            cur = next;
        }
        remaining -= picked.len();
        picked.sort_unstable();
        subwords.push(picked.into_iter().map(|i| word[i]).collect());
    }
    Ok(subwords)
}

/// Charge of a word: the sum of the charges of its standard subwords.
pub fn charge_word(word: &[Letter]) -> Result<u64> {
    extract_standard_subwords(word)?
        .iter()
        .map(|w| charge_standard(w))
        .sum()
}

fn young_columns(t: &Tableau) -> Vec<Vec<Letter>> {
    let mut cols = Vec::new();
    for c in 1..=t.shape().max_part() {
        let entries: Vec<Letter> = (1..=t.shape().len())
            .filter(|&r| t.shape().part(r) >= c)
            .map(|r| t.entry_at(crate::shapes::BoxPos::new(c, r)).unwrap())
            .collect();
        cols.push(entries);
    }
    cols
}

fn young_from_columns(cols: Vec<Vec<Letter>>) -> Result<Tableau> {
    let cols: Vec<Column> = cols
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(i, entries)| Column {
            col: i + 1,
            top_row: 1,
            entries,
        })
        .collect();
    Tableau::from_columns(&cols)
}

/// Column Schensted insertion into a semistandard Young tableau: the letter
/// bumps the topmost entry `>=` it and the bumped entry moves one column
/// right, appending at the bottom once it exceeds everything.
pub fn schensted_column_insert(x: Letter, t: &Tableau) -> Result<Tableau> {
    let mut cols = young_columns(t);
    let mut cur = x;
    let mut c = 0usize;
    loop {
        if c == cols.len() {
            cols.push(vec![cur]);
            break;
        }
        match cols[c].iter().position(|&e| e >= cur) {
            None => {
                cols[c].push(cur);
                break;
            }
            Some(i) => {
                std::mem::swap(&mut cols[c][i], &mut cur);
                c += 1;
            }
        }
    }
    young_from_columns(cols)
}

/// The unique semistandard Young tableau whose column word is plactic
/// equivalent to `word`, built by column-inserting the letters left to right.
pub fn tableau_from_word(word: &[Letter]) -> Result<Tableau> {
    let mut t = Tableau::empty();
    for &l in word {
        t = schensted_column_insert(l, &t)?;
    }
    Ok(t)
}

/// Delete every letter that appears in all columns (recursively), closing
/// the gaps in the letter range.
pub fn red_a(t: &Tableau) -> Result<Tableau> {
    let mut cur = t.clone();
    loop {
        let cols = young_columns(&cur);
        if cols.is_empty() {
            return Ok(cur);
        }
        let full: Option<Letter> = cols[0]
            .iter()
            .copied()
            .find(|l| cols.iter().all(|c| c.contains(l)));
        let Some(level) = full else {
            return Ok(cur);
        };
        let newcols: Vec<Vec<Letter>> = cols
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .filter(|&l| l != level)
                    .map(|l| {
                        if l > level {
                            Letter::new(l.value() - 1)
                        } else {
                            Ok(l)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        cur = young_from_columns(newcols)?;
    }
}

/// One cocyclage step on a semistandard Young tableau whose weight differs
/// from its shape: reduce, pop the first letter of the column word, rebuild
/// the rest and column-insert the letter.
pub fn cocyc_a(t: &Tableau) -> Result<Tableau> {
    if t.weight_a()?.parts() == t.shape().parts() {
        return Err(Error::WeightEqualsShape);
    }
    let reduced = red_a(t)?;
    let word = reduced.column_word_ne();
    let (x, rest) = word.split_first().expect("reduced tableau is nonempty");
    let base = tableau_from_word(rest)?;
    schensted_column_insert(*x, &base)
}

/// Number of cocyclage steps until weight equals shape.
pub fn charge_via_cocyclage(t: &Tableau) -> Result<u64> {
    let mut cur = t.clone();
    let mut steps = 0u64;
    while cur.weight_a()?.parts() != cur.shape().parts() {
        cur = cocyc_a(&cur)?;
        steps += 1;
        if steps > 10_000 {
            return Err(Error::IterationBound(10_000));
        }
    }
    Ok(steps)
}

/// All semistandard Young tableaux of the given shape over `1..=max_letter`.
pub fn enumerate_ssyt(shape: &crate::shapes::Partition, max_letter: u32) -> Vec<Tableau> {
    let boxes = crate::shapes::natural_order(shape.as_composition());
    let mut out = Vec::new();
    let mut entries: Vec<Letter> = Vec::with_capacity(boxes.len());
    fn rec(
        shape: &Composition,
        boxes: &[crate::shapes::BoxPos],
        max_letter: u32,
        entries: &mut Vec<Letter>,
        out: &mut Vec<Tableau>,
    ) {
        if entries.len() == boxes.len() {
            out.push(Tableau::new(shape.clone(), entries.clone()).unwrap());
            return;
        }
        let b = boxes[entries.len()];
        let mut min = 1;
        if b.col > 1 {
            // weakly increasing along the row
            let left = crate::shapes::box_label(shape, crate::shapes::BoxPos::new(b.col - 1, b.row));
            min = min.max(entries[left - 1].index());
        }
        if b.row > 1 && shape.part(b.row - 1) >= b.col {
            // strictly increasing down the column
            let up = crate::shapes::box_label(shape, crate::shapes::BoxPos::new(b.col, b.row - 1));
            min = min.max(entries[up - 1].index() + 1);
        }
        for v in min..=max_letter {
            entries.push(Letter::unbarred(v));
            rec(shape, boxes, max_letter, entries, out);
            entries.pop();
        }
    }
    rec(
        shape.as_composition(),
        &boxes,
        max_letter,
        &mut entries,
        &mut out,
    );
    out
}
