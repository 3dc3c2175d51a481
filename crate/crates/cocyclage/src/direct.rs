//! Direct construction of iterated cocyclage images of row tableaux.
//!
//! Instead of iterating cocyclage, the k-th image of a one-row symplectic
//! tableau is assembled in one pass: the shape comes from the weighted shift
//! chain, and the content assignment walks the boxes pairing each unbarred
//! box with a barred partner (their contents are opposite) or filling runs of
//! singles with leftover weight. The augmented refinement interpolates
//! between consecutive images through locally shifted shapes.
//!
//! The weighted shift chain used here folds reductions into the step that
//! triggers them, so every constructed tableau is already reduced and the
//! chain state matches the shape and weight of the reduced cocyclage images.

use crate::shapes::{
    distance_labels, localshift_iter, shift_shape, simp, wshift_shape, CompOrAug,
    Composition, Partition,
};
use crate::tableaux::{AugmentedTableau, Letter, TabOrAug, Tableau};
use crate::typec::SymplecticRowSpec;
use crate::{Error, Result};

/// Pairing status of one box of a directly constructed tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// 1-based label of the partner box; partners carry opposite letters.
    Partner(usize),
    /// A box filled from the leftover weight.
    Single,
}

/// A tableau together with the partner structure the construction used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partnered<T> {
    pub tableau: T,
    /// Pairing per box, indexed by natural-order label minus one.
    pub pairing: Vec<Pairing>,
    /// Number of reductions absorbed by the shift chain up to this stage.
    pub nred: usize,
    /// First letter level with no leftover weight; the partner guard.
    pub r_threshold: usize,
}

/// Shape and weight after `k` weighted shifts of `((p), mu)`.
///
/// Stage zero is the row itself; reductions happen inside the step that
/// needs them, so the state may still be blocked (its reduction belongs to
/// the next step).
pub fn formal_state(p: usize, mu: &Partition, k: usize) -> (Composition, Partition) {
    let row = Composition::new(vec![p]).expect("row shape");
    let mut state = (row, mu.clone());
    for _ in 0..k {
        state = wshift_shape(&state.0, &state.1);
    }
    state
}

/// Shape and weight after `k` weighted shifts with the pending reduction
/// folded in; always an authorized state.
pub fn reduced_state(p: usize, mu: &Partition, k: usize) -> (Composition, Partition) {
    let state = formal_state(p, mu, k);
    simp(&state.0, &state.1)
}

/// The deflated row letters for a given reduction count: the weight parts
/// consumed by reductions are deleted and all letters move `nred` levels
/// outward.
fn deflated_row(spec: &SymplecticRowSpec, nred: usize) -> (Vec<Letter>, usize) {
    let r_threshold = spec.n - nred + 1;
    let mut entries = Vec::new();
    for i in (1..=spec.n).rev() {
        // k_i barred copies survive always, the weight part only below the
        // reduction threshold.
        let count = spec.k[i - 1] + if i >= r_threshold { 0 } else { spec.mu_bar(i) };
        let shifted = Letter::barred((i + nred) as u32);
        entries.extend(std::iter::repeat_n(shifted, count));
    }
    for i in 1..=spec.n {
        let shifted = Letter::unbarred((i + nred) as u32);
        entries.extend(std::iter::repeat_n(shifted, spec.k[i - 1]));
    }
    (entries, r_threshold)
}

fn stage_row(
    spec: &SymplecticRowSpec,
    state: &(Composition, Partition),
) -> Result<(Vec<Letter>, usize, usize)> {
    let nred = spec.mu.len() - state.1.len();
    let (entries, r_threshold) = deflated_row(spec, nred);
    if entries.len() != state.0.size() {
        return Err(Error::InvalidShape(format!(
            "row has {} letters but shape {:?} has {} boxes",
            entries.len(),
            state.0,
            state.0.size()
        )));
    }
    Ok((entries, nred, r_threshold))
}

/// The deflated row `T_alpha` at stage `k` of the reduced chain.
///
/// Returns the row, the reduction count, the threshold `R = n - nred + 1`,
/// and the stage shape.
pub fn compute_t_alpha(
    spec: &SymplecticRowSpec,
    k: usize,
) -> Result<(Tableau, usize, usize, Composition)> {
    let state = reduced_state(spec.p, &spec.mu, k);
    let (entries, nred, r_threshold) = stage_row(spec, &state)?;
    let row = if entries.is_empty() {
        Tableau::empty()
    } else {
        Tableau::new(Composition::new(vec![entries.len()])?, entries)?
    };
    Ok((row, nred, r_threshold, state.0))
}

/// The content-assignment loop shared by the plain and augmented builds.
///
/// Walks the unbarred boxes left to right and the barred boxes right to
/// left. A pair becomes partners when the candidate content `X` undercuts
/// the current weight level (or no weight levels remain); otherwise the run
/// of boxes for the current level is filled with singles. Barred boxes left
/// over at the end keep their deflated-row contents.
fn assign_contents<D>(
    t_alpha: &[Letter],
    delta: D,
    spec: &SymplecticRowSpec,
    nred: usize,
    r_threshold: usize,
) -> Result<(Vec<Letter>, Vec<Pairing>)>
where
    D: Fn(usize, usize) -> Result<usize>,
{
    let size = t_alpha.len();
    let mut content: Vec<Option<Letter>> = vec![None; size];
    let mut pairing = vec![Pairing::Single; size];
    let mut d = t_alpha
        .iter()
        .position(|l| !l.is_barred())
        .map(|i| i + 1)
        .unwrap_or(size + 1);
    let mut dp = t_alpha
        .iter()
        .rposition(|l| l.is_barred())
        .map(|i| i + 1)
        .unwrap_or(0);
    let mut level = 1usize;
    while d <= size {
        if dp == 0 {
            return Err(Error::InvalidShape(
                "ran out of barred boxes while pairing".into(),
            ));
        }
        let x = t_alpha[d - 1].value() + delta(dp, d)? as i32;
        if (x as i64) < (level + nred) as i64 || level >= r_threshold {
            content[dp - 1] = Some(Letter::new(-x)?);
            content[d - 1] = Some(Letter::new(x)?);
            pairing[dp - 1] = Pairing::Partner(d);
            pairing[d - 1] = Pairing::Partner(dp);
            d += 1;
            dp -= 1;
        } else {
            let run = spec.mu_bar(level);
            if dp < run {
                return Err(Error::InvalidShape(
                    "single run exceeds the remaining barred boxes".into(),
                ));
            }
            for s in (dp - run + 1)..=dp {
                content[s - 1] = Some(Letter::barred((level + nred) as u32));
            }
            dp -= run;
            level += 1;
        }
    }
    // Remaining barred boxes are singles with their deflated contents.
    for s in 1..=dp {
        content[s - 1] = Some(t_alpha[s - 1]);
    }
    let entries = content
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidShape("unassigned box".into()))?;
    Ok((entries, pairing))
}

/// The k-th direct cocyclage image of the row tableau of `spec`.
///
/// Built on the formal shift chain, whose stage zero is the row itself; a
/// stage that is still blocked reduces to the next reduced image, so
/// `red(T_k)` always equals the k-th cocyclage iterate.
pub fn compute_tk(spec: &SymplecticRowSpec, k: usize) -> Result<Partnered<Tableau>> {
    let state = formal_state(spec.p, &spec.mu, k);
    let (t_alpha, nred, r_threshold) = stage_row(spec, &state)?;
    let alpha = state.0;
    let (entries, pairing) = assign_contents(
        &t_alpha,
        |a, b| distance_labels(&alpha, a, b),
        spec,
        nred,
        r_threshold,
    )?;
    Ok(Partnered {
        tableau: Tableau::new(alpha, entries)?,
        pairing,
        nred,
        r_threshold,
    })
}

/// Label geometry of a locally shifted stage shape.
#[derive(Clone, Debug)]
pub struct AugmentedDistanceContext {
    /// The stage shape before local shifting.
    pub alpha: Composition,
    /// Local shift step, `1..=r` with `localshift^r = shift`.
    pub s: usize,
    /// Label of the lower half of the split box.
    pub c: usize,
    /// Whether the deflated row carries a barred letter at label `c`.
    pub c_barred: bool,
}

/// Label relocation: the `s - 1` labels left of the split move one step
/// right, everything else stays.
pub fn pos_map(ctx: &AugmentedDistanceContext, x: usize) -> usize {
    if x >= ctx.c + 1 - ctx.s && x < ctx.c {
        x + 1
    } else {
        x
    }
}

/// Distance on a locally shifted shape, evaluated through [`pos_map`] on the
/// stage shape; at the split label the barredness of the deflated-row entry
/// selects which half anchors the distance.
pub fn delta_augmented(
    ctx: &AugmentedDistanceContext,
    x: usize,
    y: usize,
) -> Result<usize> {
    let d = |a, b| distance_labels(&ctx.alpha, a, b);
    if ctx.s == 1 || (x != ctx.c && y != ctx.c) {
        d(pos_map(ctx, x), pos_map(ctx, y))
    } else if y == ctx.c {
        d(pos_map(ctx, x), if ctx.c_barred { ctx.c } else { ctx.c + 1 })
    } else {
        d(if ctx.c_barred { ctx.c } else { ctx.c + 1 }, pos_map(ctx, y))
    }
}

/// The number of local shifts that close the stage shape into its shifted
/// shape.
pub fn closure_steps(alpha: &Composition) -> Result<usize> {
    let j = alpha
        .first_max_row()
        .ok_or(Error::StepOutOfRange { s: 0, r: 0 })?;
    Ok(alpha.part(j + 1) + 1)
}

/// The distance context for step `s` of the refinement at stage `k`.
pub fn augmented_context(
    spec: &SymplecticRowSpec,
    k: usize,
    s: usize,
) -> Result<AugmentedDistanceContext> {
    let (t_alpha, _, _, alpha) = compute_t_alpha(spec, k)?;
    let j = alpha
        .first_max_row()
        .ok_or(Error::StepOutOfRange { s, r: 0 })?;
    let r_closure = alpha.part(j + 1) + 1;
    if s < 1 || s >= r_closure {
        return Err(Error::StepOutOfRange { s, r: r_closure });
    }
    let c: usize = alpha.parts()[..j].iter().sum::<usize>() - 1 + s;
    Ok(AugmentedDistanceContext {
        c_barred: t_alpha.entries()[c - 1].is_barred(),
        alpha,
        s,
        c,
    })
}

/// The augmented refinement `T_{k,s}`: the construction run on the shape
/// `localshift^s` of the reduced stage shape, with distances taken through
/// [`delta_augmented`]. `s` ranges over `1..=r` where `localshift^r` closes
/// into the shifted shape; the closing step produces a plain tableau whose
/// distances live directly on the shifted shape, making it the next image
/// of the formal chain.
pub fn compute_tks(
    spec: &SymplecticRowSpec,
    k: usize,
    s: usize,
) -> Result<Partnered<TabOrAug>> {
    let (t_alpha, nred, r_threshold, alpha) = compute_t_alpha(spec, k)?;
    let r_closure = closure_steps(&alpha)?;
    if s < 1 || s > r_closure {
        return Err(Error::StepOutOfRange { s, r: r_closure });
    }
    let delta: Box<dyn Fn(usize, usize) -> Result<usize>> = if s == r_closure {
        let shifted = shift_shape(&alpha);
        Box::new(move |a, b| distance_labels(&shifted, a, b))
    } else {
        let ctx = augmented_context(spec, k, s)?;
        Box::new(move |a, b| delta_augmented(&ctx, a, b))
    };
    let (entries, pairing) =
        assign_contents(t_alpha.entries(), delta, spec, nred, r_threshold)?;
    let tableau = match localshift_iter(&alpha, s)? {
        CompOrAug::Comp(shape) => TabOrAug::Tab(Tableau::new(shape, entries)?),
        CompOrAug::Aug(shape) => TabOrAug::Aug(AugmentedTableau::new(shape, entries)?),
    };
    Ok(Partnered {
        tableau,
        pairing,
        nred,
        r_threshold,
    })
}

/// Closed form of the symplectic charge of a one-row tableau:
/// `sum_i (n-i)(2 k_i + mu_ibar) + sum_i k_i`.
pub fn charge_c_closed(spec: &SymplecticRowSpec) -> i64 {
    let n = spec.n as i64;
    (1..=spec.n)
        .map(|i| {
            let weight = 2 * spec.k[i - 1] + spec.mu_bar(i);
            (n - i as i64) * weight as i64 + spec.k[i - 1] as i64
        })
        .sum()
}

/// The orbit length of a one-row tableau in closed form:
/// `sum_i (n-i) mu_ibar + (sum k)(2 sum k + 2 l(mu) - 1)`.
pub fn orbit_length_closed(spec: &SymplecticRowSpec) -> i64 {
    let n = spec.n as i64;
    let total_k: i64 = spec.k.iter().map(|&v| v as i64).sum();
    let frommu: i64 = (1..=spec.n)
        .map(|i| (n - i as i64) * spec.mu_bar(i) as i64)
        .sum();
    frommu + total_k * (2 * total_k + 2 * spec.mu.len() as i64 - 1)
}

/// The expected positive entries of the terminal column of a row orbit:
/// `{ i + l(mu) + 2j : 1 <= i <= n, sum_{l<i} k_l <= j < sum_{l<=i} k_l }`.
pub fn terminal_column_levels(spec: &SymplecticRowSpec) -> Vec<u32> {
    let offset = spec.mu.len() as u32;
    let mut out = Vec::new();
    let mut consumed = 0u32;
    for i in 1..=spec.n {
        for j in consumed..consumed + spec.k[i - 1] as u32 {
            out.push(i as u32 + offset + 2 * j);
        }
        consumed += spec.k[i - 1] as u32;
    }
    out.sort_unstable();
    out
}
