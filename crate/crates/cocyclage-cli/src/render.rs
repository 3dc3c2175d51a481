//! Plain-text rendering of tableaux and partner structures.

use cocyclage::direct::{Pairing, Partnered};
use cocyclage::tableaux::{TabOrAug, Tableau};

/// Render a tableau as an aligned grid, one row per line.
pub fn grid(t: &Tableau) -> String {
    if t.is_empty() {
        return "(empty)\n".to_string();
    }
    let width = t
        .entries()
        .iter()
        .map(|l| l.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for r in 1..=t.shape().len() {
        let line: Vec<String> = t
            .row(r)
            .iter()
            .map(|l| format!("{:>width$}", l.to_string()))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn grid_or_aug(t: &TabOrAug) -> String {
    match t {
        TabOrAug::Tab(t) => grid(t),
        TabOrAug::Aug(a) => format!(
            "{}split at column {}, row {} carrying {}\n",
            grid(&a.plus_tableau()),
            a.shape().split().col,
            a.shape().split().row,
            a.minus_entry()
        ),
    }
}

/// One line listing the partner pairs and the single boxes by label.
pub fn pairing_line(p: &Partnered<Tableau>) -> String {
    let mut pairs = Vec::new();
    let mut singles = Vec::new();
    for (i, pairing) in p.pairing.iter().enumerate() {
        match pairing {
            Pairing::Partner(j) if i + 1 < *j => pairs.push(format!("({},{})", i + 1, j)),
            Pairing::Partner(_) => {}
            Pairing::Single => singles.push((i + 1).to_string()),
        }
    }
    let mut out = String::from("partners:");
    if pairs.is_empty() {
        out.push_str(" none");
    } else {
        for p in pairs {
            out.push(' ');
            out.push_str(&p);
        }
    }
    if !singles.is_empty() {
        out.push_str("  singles: ");
        out.push_str(&singles.join(","));
    }
    out
}

/// Signed-label rendering of the boxes: partners get `+`/`-` tags of the
/// same pair index, singles get `s`.
pub fn pairing_grid(p: &Partnered<Tableau>) -> String {
    let mut tags = vec![String::new(); p.pairing.len()];
    let mut pair_index = 0usize;
    for (i, pairing) in p.pairing.iter().enumerate() {
        match pairing {
            Pairing::Partner(j) if i + 1 < *j => {
                pair_index += 1;
                tags[i] = format!("-{pair_index}");
                tags[*j - 1] = format!("+{pair_index}");
            }
            Pairing::Partner(_) => {}
            Pairing::Single => tags[i] = "s".to_string(),
        }
    }
    let width = tags.iter().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    let mut label = 0usize;
    for r in 1..=p.tableau.shape().len() {
        let len = p.tableau.shape().part(r);
        let line: Vec<String> = (0..len)
            .map(|_| {
                label += 1;
                format!("{:>width$}", tags[label - 1])
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
