//! Output formats.

use std::io::{self, Write};

use lyruns::{duval_factorization, LyndonArray, Order, RunSet, Text};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn exponent(len: usize, period: usize) -> (usize, usize) {
    let g = gcd(len, period);
    (len / g, period / g)
}

pub fn runs_json(out: &mut impl Write, runs: &RunSet) -> io::Result<()> {
    write!(out, "{{\"n\":{},\"runs\":[", runs.text_len())?;
    for (k, r) in runs.iter().enumerate() {
        let (num, den) = exponent(r.len(), r.period);
        if k > 0 {
            out.write_all(b",")?;
        }
        write!(
            out,
            "{{\"start\":{},\"end\":{},\"period\":{},\"exponent_num\":{num},\"exponent_den\":{den}}}",
            r.start, r.end, r.period
        )?;
    }
    let sigma = runs.exponent_sum();
    writeln!(
        out,
        "],\"count\":{},\"sigma_num\":{},\"sigma_den\":{}}}",
        runs.len(),
        sigma.numer(),
        sigma.denom()
    )
}

pub fn runs_tsv(out: &mut impl Write, runs: &RunSet) -> io::Result<()> {
    for r in runs.iter() {
        let (num, den) = exponent(r.len(), r.period);
        writeln!(out, "{}\t{}\t{}\t{num}/{den}", r.start, r.end, r.period)?;
    }
    Ok(())
}

/// `i end` per line for one order, `i end0 end1` for both.
pub fn lyndon_text(
    out: &mut impl Write,
    arr: &LyndonArray,
    order: Option<Order>,
) -> io::Result<()> {
    for i in 1..=arr.len() {
        match order {
            Some(o) => writeln!(out, "{i} {}", arr.end(o, i))?,
            None => writeln!(
                out,
                "{i} {} {}",
                arr.end(Order::Ascending, i),
                arr.end(Order::Descending, i)
            )?,
        }
    }
    Ok(())
}

pub fn lyndon_json(
    out: &mut impl Write,
    arr: &LyndonArray,
    order: Option<Order>,
) -> io::Result<()> {
    let list = |o: Order| {
        let ends: Vec<String> = (1..=arr.len()).map(|i| arr.end(o, i).to_string()).collect();
        format!("[{}]", ends.join(","))
    };
    write!(out, "{{\"n\":{}", arr.len())?;
    for o in Order::BOTH {
        if order.is_none_or(|x| x == o) {
            write!(out, ",\"end{}\":{}", o.index(), list(o))?;
        }
    }
    writeln!(out, "}}")
}

/// Factors of the original bytes separated by `|`.
pub fn factorization(bytes: &[u8], text: &Text, order: Order) -> String {
    let mut parts = Vec::new();
    let mut at = 0;
    for f in duval_factorization(text.symbols(), order) {
        parts.push(String::from_utf8_lossy(&bytes[at..at + f.len()]).into_owned());
        at += f.len();
    }
    parts.join("|")
}
