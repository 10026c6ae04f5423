use serde_json::json;
use tripart::enumerate::{self, number_theory, ClassCounts, CountSeries};
use tripart::hull::{self, complement_hull, partition_hull, slope_interval};
use tripart::lattice::{self, SubpartitionCounter};
use tripart::partition::{classify_wide_tall, MAX_PARTS};
use tripart::words::{self, BalanceState, ChiTriple};
use tripart::{is_triangular, BinaryWord, Cell, Error, Fraction, Partition};

use crate::emit::{self, csv, json, Failure, Outcome};
use crate::{
    BalancedCommand, ClassMethod, ClassesArgs, Command, CountArgs, CountMethod, DecodeCommand,
    EncodeCommand, Format, HullCommand, LatticeCommand, PartitionCommand, PhiCommand,
    RemovableMethod, Series, TableauxArgs,
};

/// Environment variable consulted when `--threads` is absent.
const THREADS_ENV: &str = "TRIPART_THREADS";

fn parse(text: &str) -> Result<Partition, Failure> {
    Ok(text.parse::<Partition>()?)
}

fn word(text: &str) -> Result<BinaryWord, Failure> {
    Ok(text.parse::<BinaryWord>()?)
}

fn fraction(text: &str) -> Result<Fraction, Failure> {
    Ok(text.parse::<Fraction>()?)
}

fn threads(flag: Option<usize>) -> Result<usize, Failure> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("{THREADS_ENV}={v} is not a thread count")))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if n == 0 {
        return Err(Failure::usage("thread count must be positive"));
    }
    Ok(n)
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Check { partition } => check(&partition),
        Command::Count(args) => count(args),
        Command::Classes(args) => classes(args),
        Command::Square { max_l, cross_check } => square(max_l, cross_check),
        Command::Rect { l } => json(&enumerate::rect_counts(l)?),
        Command::Bench { max_n, threads: t } => bench(max_n as usize, threads(t)?),
        Command::Lattice(cmd) => lattice_command(cmd),
        Command::Tableaux(args) => tableaux(args),
        Command::Balanced(cmd) => balanced(cmd),
        Command::Encode(cmd) => encode(cmd),
        Command::Decode(cmd) => decode(cmd),
        Command::Partition(cmd) => partition_command(cmd),
        Command::Hull(cmd) => hull_command(cmd),
        Command::Removable { partition, method } => removable(&partition, method),
        Command::Phi(PhiCommand::Map { p }) => json(&enumerate::phi_map(&parse(&p)?)?),
        Command::Phi(PhiCommand::Inv { a, b, d, e }) => {
            let q = enumerate::PhiQuad::new(a, b, d, e)?;
            json(&emit::partition(&enumerate::phi_inv(&q)?))
        }
        Command::Triangle { d, e, l } => json(&enumerate::triangle_counts(d, e, l)?),
        Command::Totient { limit } => {
            let phi = number_theory::totient_sieve(limit);
            Ok(csv("n,phi", (1..=limit).map(|n| [n as u64, phi[n]])))
        }
        Command::Pp { m } => json(&json!({ "m": m, "pp": number_theory::coprime_pair_count(m) })),
        Command::Ndelta { a, b, k, m, i, j } => {
            json(&json!({ "size": enumerate::n_delta(a, b, k, m, i, j)? }))
        }
    }
}

fn check(text: &str) -> Outcome {
    let p = parse(text)?;
    let report = is_triangular(&p);
    let interval = match report.interval {
        Some(interval) => interval,
        None => slope_interval(&p)?,
    };
    let shape = report.triangular.then(|| classify_wide_tall(&p));
    json(&json!({
        "partition": p,
        "triangular": report.triangular,
        "removable": report.removable,
        "addable": report.addable,
        "t_minus": interval.t_minus,
        "t_plus": interval.t_plus,
        "wide": shape.map(|s| s.wide),
        "tall": shape.map(|s| s.tall),
        "witness": report.witness,
    }))
}

fn count(args: CountArgs) -> Outcome {
    let max_n = args.max_n as usize;
    let series = match (args.series, args.method) {
        (Series::Delta, CountMethod::Dfs) => {
            enumerate::count_delta_dfs(max_n, threads(args.threads)?)?
        }
        (Series::Delta, CountMethod::Gf) => enumerate::count_delta_gf(max_n)?,
        (Series::Delta, CountMethod::Brute) => enumerate::count_delta_brute(max_n)?,
        (Series::Delta2, CountMethod::Gf) => enumerate::count_delta2(max_n)?,
        (Series::Delta2, CountMethod::Brute) => {
            let values = (0..=max_n)
                .map(|n| enumerate::classify_direct(n).map(|c| c.d2))
                .collect::<Result<Vec<u64>, Error>>()?;
            CountSeries::new("delta2", values)
        }
        (Series::Delta2, CountMethod::Dfs) => {
            return Err(Failure::usage(
                "the delta2 series has no dfs engine; use --method gf or brute",
            ))
        }
    };
    match args.format {
        Format::Csv => Ok(csv(
            "n,count",
            series
                .values
                .iter()
                .enumerate()
                .map(|(n, v)| [n as u64, *v]),
        )),
        Format::Json => json(&json!({
            "series": series.label,
            "max_n": max_n,
            "values": series.values,
        })),
    }
}

fn class_row(n: usize, c: ClassCounts) -> [u64; 6] {
    [n as u64, c.d1, c.d2, c.up1, c.up2, c.d2up2]
}

fn classes(args: ClassesArgs) -> Outcome {
    let max_n = args.max_n as usize;
    let rows: Vec<[u64; 6]> = match args.method {
        ClassMethod::Derive => {
            let delta = enumerate::count_delta_dfs(max_n + 1, threads(args.threads)?)?;
            let delta2 = enumerate::count_delta2(max_n + 1)?;
            let series = enumerate::derive_class_series(&delta, &delta2)?;
            (1..=max_n)
                .map(|n| class_row(n, series.at(n).expect("series covers 0..=N")))
                .collect()
        }
        ClassMethod::Direct => (1..=max_n)
            .map(|n| enumerate::classify_direct(n).map(|c| class_row(n, c)))
            .collect::<Result<_, Error>>()?,
    };
    Ok(csv("n,d1,d2,up1,up2,d2up2", rows))
}

fn square(max_l: usize, cross_check: bool) -> Outcome {
    let mut rows = Vec::with_capacity(max_l + 1);
    for l in 0..=max_l {
        let closed = enumerate::square_count(l)?;
        let mut row = vec![l as u64, closed];
        if cross_check {
            let recurrence = lattice::count_subpartitions(&Partition::staircase(l as i64))?;
            if recurrence != closed {
                return Err(Error::Domain(format!(
                    "l = {l}: closed form {closed} but recurrence {recurrence}"
                ))
                .into());
            }
            row.push(recurrence);
        }
        rows.push(row);
    }
    let header = if cross_check {
        "l,count,recurrence"
    } else {
        "l,count"
    };
    Ok(csv(header, rows))
}

fn bench(max_n: usize, threads: usize) -> Outcome {
    let delta = enumerate::count_delta_dfs(max_n, threads)?;
    let pp = number_theory::coprime_pair_table(2 * max_n + 1);
    let rows = (1..=max_n).map(|n| {
        let d = delta.values[n];
        let lower = pp[n.div_ceil(2)] as f64 / 3.0;
        let ratio = if n == 1 {
            String::new()
        } else {
            format!("{:.4}", d as f64 / (n as f64 * (n as f64).ln()))
        };
        [
            n.to_string(),
            d.to_string(),
            pp[2 * n + 1].to_string(),
            format!("{lower:.4}"),
            ratio,
        ]
    });
    Ok(csv("n,delta,pp_upper,pp_lower,ratio_nlogn", rows))
}

fn lattice_command(cmd: LatticeCommand) -> Outcome {
    match cmd {
        LatticeCommand::Join { p, q } => {
            json(&emit::partition(&lattice::join(&parse(&p)?, &parse(&q)?)?))
        }
        LatticeCommand::Meet { p, q } => {
            json(&emit::partition(&lattice::meet(&parse(&p)?, &parse(&q)?)?))
        }
        LatticeCommand::Mobius { p, q, reference } => {
            let (p, q) = (parse(&p)?, parse(&q)?);
            let value = if reference {
                lattice::mobius_reference(&p, &q)?
            } else {
                lattice::mobius(&p, &q)?.value()
            };
            json(&json!({ "mobius": value }))
        }
        LatticeCommand::Covers { p } => {
            let p = parse(&p)?;
            json(&json!({
                "down": lattice::covers_down(&p)?,
                "up": lattice::covers_up(&p)?,
            }))
        }
        LatticeCommand::Subcount { p, memo_cap } => {
            let count = SubpartitionCounter::with_cap(memo_cap).count(&parse(&p)?)?;
            json(&json!({ "count": count }))
        }
        LatticeCommand::Diagonal { p } => json(&lattice::diagonal(&parse(&p)?)?),
        LatticeCommand::Interior { p } => json(&emit::partition(&lattice::interior(&parse(&p)?)?)),
    }
}

fn tableaux(args: TableauxArgs) -> Outcome {
    let (shape, count) = match (args.two_row, args.shape) {
        (Some(rows), _) => {
            let (t1, t2) = (rows[0], rows[1]);
            let count = if args.brute {
                lattice::tyt_count_brute(&Partition::new(vec![t1, t2])?)?
            } else {
                lattice::tyt_count_two_row(t1, t2)?
            };
            (Partition::new(vec![t1, t2])?, count)
        }
        (None, Some(text)) => {
            let p = parse(&text)?;
            let count = lattice::tyt_count_brute(&p)?;
            (p, count)
        }
        (None, None) => return Err(Failure::usage("give --two-row T1 T2 or --shape P")),
    };
    json(&json!({ "shape": shape, "count": count }))
}

fn balanced(cmd: BalancedCommand) -> Outcome {
    match cmd {
        BalancedCommand::Check { word: text, naive } => {
            let w = word(&text)?;
            let balanced = if naive {
                words::is_balanced_naive(&w)
            } else {
                words::is_balanced(&w)
            };
            json(&json!({ "word": w, "balanced": balanced }))
        }
        BalancedCommand::Count {
            max_len,
            brute,
            include_empty,
        } => {
            let start = if include_empty { 0 } else { 1 };
            let rows = (start..=max_len)
                .map(|len| {
                    let count = if brute {
                        words::balanced_enumerate(len)?.len() as u64
                    } else {
                        words::balanced_count_formula(len)?
                    };
                    Ok([len as u64, count])
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(csv("len,count", rows))
        }
        BalancedCommand::List { len } => {
            let mut out = String::new();
            for w in words::balanced_enumerate(len)? {
                out.push_str(&w.to_string());
                out.push('\n');
            }
            Ok(out)
        }
        BalancedCommand::Mechanical { alpha, beta, len } => {
            let w = words::mechanical_word(fraction(&alpha)?, fraction(&beta)?, len)?;
            json(&json!({ "word": w }))
        }
        BalancedCommand::Extend { word: text, bit } => {
            if bit > 1 {
                return Err(Failure::usage(format!("letter {bit} is not 0 or 1")));
            }
            let w = word(&text)?;
            let mut state = BalanceState::new();
            for &b in w.bits() {
                state = state
                    .extend(b)
                    .ok_or_else(|| Error::Domain(format!("word '{w}' is not balanced")))?;
            }
            json(&json!({ "word": state.extend(bit).map(|s| s.word().clone()) }))
        }
    }
}

fn encode(cmd: EncodeCommand) -> Outcome {
    match cmd {
        EncodeCommand::Omega { partition } => {
            json(&json!({ "word": words::omega(&parse(&partition)?)? }))
        }
        EncodeCommand::Chi { partition } => json(&words::chi(&parse(&partition)?)?),
    }
}

fn decode(cmd: DecodeCommand) -> Outcome {
    match cmd {
        DecodeCommand::Omega { word: text } => {
            json(&emit::partition(&words::omega_inv(&word(&text)?)?))
        }
        DecodeCommand::Chi { m, d, word: text } => {
            let triple = ChiTriple::new(m, d, word(&text)?)?;
            let p = words::xi(&triple)?;
            let mut value = emit::partition(&p);
            value["size"] = json!(words::chi_size(&triple)?);
            json(&value)
        }
    }
}

fn partition_command(cmd: PartitionCommand) -> Outcome {
    match cmd {
        PartitionCommand::Conjugate { p } => json(&emit::partition(&parse(&p)?.conjugate())),
        PartitionCommand::Corners { p, complement } => {
            let p = parse(&p)?;
            let cells: Vec<Cell> = if complement {
                p.complementary_corner_cells()
            } else if p.is_empty() {
                Vec::new()
            } else {
                p.corner_cells()?
            };
            json(&json!({ "cells": cells }))
        }
        PartitionCommand::Contains { outer, inner } => {
            json(&json!({ "contains": parse(&outer)?.contains(&parse(&inner)?) }))
        }
        PartitionCommand::Staircase { k } => {
            if !(0..=MAX_PARTS as i64).contains(&k) {
                return Err(Failure::usage(format!(
                    "k = {k} must lie in 0..={MAX_PARTS}"
                )));
            }
            json(&emit::partition(&Partition::staircase(k)))
        }
        PartitionCommand::Bounding { h, l } => json(&emit::partition(&Partition::bounding(h, l)?)),
        PartitionCommand::Armleg { p, x, y } => {
            let (arm, leg) = hull::arm_leg(&parse(&p)?, Cell::new(x, y))?;
            json(&json!({ "arm": arm, "leg": leg }))
        }
        PartitionCommand::Classify { p } => {
            let p = parse(&p)?;
            if !is_triangular(&p).triangular {
                return Err(Error::NotTriangular(p.to_string()).into());
            }
            json(&classify_wide_tall(&p))
        }
    }
}

fn hull_command(cmd: HullCommand) -> Outcome {
    let chain = |p: &Partition, complement: bool| -> Result<hull::HullChain, Failure> {
        Ok(if complement {
            complement_hull(p)
        } else {
            partition_hull(p)?
        })
    };
    match cmd {
        HullCommand::Chain { p, complement } => json(&chain(&parse(&p)?, complement)?),
        HullCommand::Extreme {
            p,
            nx,
            ny,
            complement,
        } => {
            if (nx, ny) == (0, 0) {
                return Err(Failure::usage("the normal must be nonzero"));
            }
            let c = chain(&parse(&p)?, complement)?;
            json(&json!({ "vertex": hull::extreme_vertex(&c, (nx, ny)) }))
        }
        HullCommand::Slope { p } => json(&slope_interval(&parse(&p)?)?),
        HullCommand::Reference { p } => {
            json(&json!({ "triangular": tripart::is_triangular_reference(&parse(&p)?) }))
        }
    }
}

fn removable(text: &str, method: RemovableMethod) -> Outcome {
    let p = parse(text)?;
    let cells = match method {
        RemovableMethod::Hull => {
            let report = is_triangular(&p);
            if !report.triangular {
                return Err(Error::NotTriangular(p.to_string()).into());
            }
            report.removable
        }
        RemovableMethod::Extremes => hull::removable_via_extremes(&p)?,
        RemovableMethod::Reduction => words::removable_via_reduction(&p)?,
    };
    json(&json!({ "removable": cells }))
}
