//! Command-line front end: single computations on tableaux and words, orbit
//! traces, and the verification harness.

mod render;
mod verify;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use cocyclage::direct::{compute_tk, Partnered};
use cocyclage::shapes::{m_mu_closed, Partition};
use cocyclage::symfun::{kostka_foulkes, kostka_onerow_formula, QPolynomial};
use cocyclage::tableaux::{Letter, Tableau};
use cocyclage::typea;
use cocyclage::typec::{
    charge_c_lecouvey, cocyc_c, enumerate_row_symplectic, insert_into_tableau, orbit, red_c,
    weight_c, SymplecticRowSpec,
};

#[derive(Parser)]
#[command(
    name = "cocyclage",
    about = "Symplectic cocyclage, charge statistics and Kostka-Foulkes polynomials",
    version
)]
struct Cli {
    /// Emit JSON instead of human-readable grids.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KostkaMethod {
    /// Group-ring oracle through Hall-Littlewood polynomials.
    Oracle,
    /// Charge generating function over the row tableaux.
    Charge,
    /// Closed one-row formula.
    Onerow,
}

#[derive(Subcommand)]
enum Command {
    /// Charge of a word over the unbarred alphabet.
    ChargeA {
        /// Comma-separated letters, e.g. "3,5,2,2,4,1,1,1,2,3".
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// One type-A cocyclage step on a semistandard Young tableau.
    CocycA {
        /// Rows separated by ';', entries by ','.
        #[arg(allow_hyphen_values = true)]
        tableau: String,
    },
    /// Insert a letter into a symplectic tableau.
    InsertC {
        /// The letter; negative numbers are barred.
        #[arg(allow_hyphen_values = true)]
        letter: i32,
        #[arg(allow_hyphen_values = true)]
        tableau: String,
    },
    /// One symplectic cocyclage step.
    CocycC {
        #[arg(allow_hyphen_values = true)]
        tableau: String,
        /// Print every intermediate state of the orbit down to the
        /// weight-zero column instead of one step.
        #[arg(long)]
        trace: bool,
    },
    /// Symplectic charge of a tableau.
    ChargeC {
        #[arg(allow_hyphen_values = true)]
        tableau: String,
        #[arg(long)]
        n: usize,
    },
    /// Direct construction of the k-th cocyclage image of a row.
    Tk {
        #[arg(long)]
        n: usize,
        /// Mirrored-pair counts k_1,...,k_n, e.g. "3,0".
        #[arg(long, value_name = "LIST")]
        k_vec: String,
        /// Weight partition, largest part first; empty for weight zero.
        #[arg(long, default_value = "")]
        mu: String,
        /// Which image to build.
        #[arg(long)]
        step: usize,
        /// Build the augmented refinement at this local step instead.
        #[arg(long)]
        s: Option<usize>,
        /// Also print the partner structure.
        #[arg(long)]
        show_partners: bool,
    },
    /// List the one-row symplectic tableaux of a given rank, length, weight.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "")]
        mu: String,
    },
    /// A Kostka-Foulkes polynomial.
    Kostka {
        #[arg(long)]
        n: usize,
        /// Shape partition, e.g. "2" for a row of two.
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value = "oracle")]
        method: KostkaMethod,
    },
    /// Full verification sweep comparing every route and asserting the
    /// structural identities along every orbit.
    Verify {
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        p_max: usize,
        /// Seed for the randomized insertion sweep.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Orbit walkthrough: every cocyclage step and, for rows, every direct
    /// image with its partner structure.
    Trace {
        #[arg(allow_hyphen_values = true)]
        tableau: String,
        #[arg(long)]
        n: usize,
    },
}

fn parse_word(s: &str) -> Result<Vec<Letter>> {
    s.split(',')
        .map(|t| {
            let v: i32 = t.trim().parse().with_context(|| format!("bad letter {t:?}"))?;
            Ok(Letter::new(v)?)
        })
        .collect()
}

fn parse_tableau(s: &str) -> Result<Tableau> {
    Ok(Tableau::parse(s)?)
}

fn parse_k_vec(s: &str, n: usize) -> Result<Vec<usize>> {
    let k: Vec<usize> = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|t| t.trim().parse().with_context(|| format!("bad count {t:?}")))
            .collect::<Result<_>>()?
    };
    if k.len() != n {
        bail!("k vector must have exactly {n} entries");
    }
    Ok(k)
}

/// The row spec of a one-row tableau, recovering the weight and the
/// mirrored-pair counts from the letter multiplicities.
fn spec_of_row(t: &Tableau, n: usize) -> Result<SymplecticRowSpec> {
    if t.shape().len() > 1 {
        bail!("not a one-row tableau");
    }
    let weights = weight_c(t, n)?;
    if weights.iter().any(|&w| w < 0) {
        bail!("row weight is not dominant");
    }
    let mut parts: Vec<usize> = weights.iter().map(|&w| w as usize).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    let mu = Partition::new(parts).map_err(|_| anyhow!("row weight is not a partition"))?;
    let k: Vec<usize> = (1..=n)
        .map(|i| {
            t.entries()
                .iter()
                .filter(|l| !l.is_barred() && l.index() == i as u32)
                .count()
        })
        .collect();
    Ok(SymplecticRowSpec::new(n, mu, k)?)
}

fn print_tableau(t: &Tableau, json: bool) {
    if json {
        println!("{{\"tableau\":\"{}\"}}", t.to_text());
    } else {
        print!("{}", render::grid(t));
    }
}

fn kostka_by_charge(n: usize, p: usize, mu: &Partition) -> Result<QPolynomial> {
    let specs = enumerate_row_symplectic(n, p, mu)?;
    let mut closed = QPolynomial::zero();
    let mut via_orbits = QPolynomial::zero();
    for spec in &specs {
        let c = cocyclage::direct::charge_c_closed(spec);
        if c < 0 {
            bail!("negative charge for {spec:?}");
        }
        closed = closed.add(&QPolynomial::q_power(c as usize));
        let o = charge_c_lecouvey(&spec.row_tableau(), n)?;
        if o < 0 {
            bail!("negative orbit charge for {spec:?}");
        }
        via_orbits = via_orbits.add(&QPolynomial::q_power(o as usize));
    }
    if closed != via_orbits {
        eprintln!("charge routes disagree: closed {closed:?} vs orbits {via_orbits:?}");
        std::process::exit(1);
    }
    Ok(closed)
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::ChargeA { word } => {
            let w = parse_word(&word)?;
            let charge = typea::charge_word(&w)?;
            if cli.json {
                println!("{{\"charge\":{charge}}}");
            } else {
                println!("{charge}");
            }
        }
        Command::CocycA { tableau } => {
            let t = parse_tableau(&tableau)?;
            print_tableau(&typea::cocyc_a(&t)?, cli.json);
        }
        Command::InsertC { letter, tableau } => {
            let t = parse_tableau(&tableau)?;
            let x = Letter::new(letter)?;
            print_tableau(&insert_into_tableau(x, &t)?, cli.json);
        }
        Command::CocycC { tableau, trace } => {
            let t = parse_tableau(&tableau)?;
            if trace {
                let orb = orbit(&t)?;
                let mut states = vec![red_c(&t)?];
                states.extend(orb.steps);
                for (k, s) in states.iter().enumerate() {
                    if cli.json {
                        println!("{{\"step\":{k},\"tableau\":\"{}\"}}", s.to_text());
                    } else {
                        println!("step {k}:");
                        print!("{}", render::grid(s));
                    }
                }
            } else {
                print_tableau(&cocyc_c(&t)?, cli.json);
            }
        }
        Command::ChargeC { tableau, n } => {
            let t = parse_tableau(&tableau)?;
            let charge = charge_c_lecouvey(&t, n)?;
            if cli.json {
                println!("{{\"charge\":{charge}}}");
            } else {
                println!("{charge}");
            }
        }
        Command::Tk {
            n,
            k_vec,
            mu,
            step,
            s,
            show_partners,
        } => {
            let mu = Partition::parse(&mu)?;
            let k = parse_k_vec(&k_vec, n)?;
            let spec = SymplecticRowSpec::new(n, mu, k)?;
            match s {
                None => {
                    let tk = compute_tk(&spec, step)?;
                    print_partnered(&tk, show_partners, cli.json);
                }
                Some(s) => {
                    let tks = cocyclage::direct::compute_tks(&spec, step, s)?;
                    if cli.json {
                        let body = match &tks.tableau {
                            cocyclage::tableaux::TabOrAug::Tab(t) => t.to_text(),
                            cocyclage::tableaux::TabOrAug::Aug(a) => a.to_text(),
                        };
                        println!("{{\"tableau\":\"{body}\"}}");
                    } else {
                        print!("{}", render::grid_or_aug(&tks.tableau));
                    }
                }
            }
        }
        Command::Enumerate { n, p, mu } => {
            let mu = Partition::parse(&mu)?;
            let specs = enumerate_row_symplectic(n, p, &mu)?;
            if cli.json {
                let items: Vec<String> = specs
                    .iter()
                    .map(|s| {
                        format!(
                            "{{\"k\":{:?},\"row\":\"{}\"}}",
                            s.k,
                            s.row_tableau().to_text()
                        )
                    })
                    .collect();
                println!("[{}]", items.join(","));
            } else {
                for s in &specs {
                    println!("k={:?} row={}", s.k, s.row_tableau().to_text());
                }
                println!("{} tableaux", specs.len());
            }
        }
        Command::Kostka {
            n,
            lambda,
            mu,
            method,
        } => {
            let lambda = Partition::parse(&lambda)?;
            let mu = Partition::parse(&mu)?;
            let poly = match method {
                KostkaMethod::Oracle => {
                    let mut lv: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
                    lv.resize(n, 0);
                    let mut mv: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
                    mv.resize(n, 0);
                    kostka_foulkes(&lv, &mv, n)?
                }
                KostkaMethod::Charge => {
                    if lambda.len() > 1 {
                        bail!("the charge method needs a one-row shape");
                    }
                    kostka_by_charge(n, lambda.size(), &mu)?
                }
                KostkaMethod::Onerow => {
                    if lambda.len() > 1 {
                        bail!("the one-row formula needs a one-row shape");
                    }
                    kostka_onerow_formula(lambda.size(), &mu, n)?
                }
            };
            println!("{}", poly.to_json());
        }
        Command::Verify { n_max, p_max, seed } => {
            return Ok(verify::run(&verify::VerifyOptions {
                n_max,
                p_max,
                seed,
                json: cli.json,
            }));
        }
        Command::Trace { tableau, n } => {
            let t = parse_tableau(&tableau)?;
            let spec = spec_of_row(&t, n).ok();
            let orb = orbit(&t)?;
            let mut states = vec![red_c(&t)?];
            states.extend(orb.steps);
            for (k, state) in states.iter().enumerate() {
                if cli.json {
                    println!("{{\"step\":{k},\"tableau\":\"{}\"}}", state.to_text());
                    continue;
                }
                println!("step {k}:");
                print!("{}", render::grid(state));
                if let Some(spec) = &spec {
                    let tk = compute_tk(spec, k)?;
                    if &red_c(&tk.tableau)? != state {
                        bail!("direct image disagrees with the orbit at step {k}");
                    }
                    if tk.tableau != *state {
                        println!("direct image before reduction:");
                        print!("{}", render::grid(&tk.tableau));
                    }
                    println!("{}", render::pairing_line(&tk));
                    print!("{}", render::pairing_grid(&tk));
                }
                println!();
            }
            if !cli.json {
                if let Some(spec) = &spec {
                    println!(
                        "m = {} = closed step count {}",
                        orb.m,
                        m_mu_closed(spec.p, &spec.mu)?
                    );
                    println!(
                        "charge = {} (closed form {})",
                        charge_c_lecouvey(&t, n)?,
                        cocyclage::direct::charge_c_closed(spec)
                    );
                } else {
                    println!("m = {}", orb.m);
                }
            }
        }
    }
    Ok(0)
}

fn print_partnered(p: &Partnered<Tableau>, show_partners: bool, json: bool) {
    if json {
        println!("{{\"tableau\":\"{}\"}}", p.tableau.to_text());
        return;
    }
    print!("{}", render::grid(&p.tableau));
    if show_partners {
        println!("{}", render::pairing_line(p));
        print!("{}", render::pairing_grid(p));
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
