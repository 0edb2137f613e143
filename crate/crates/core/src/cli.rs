//! Command-line front end: matrix expression parsing, analysis reports and
//! the check-suite runner.

use std::fmt;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cycarith::{CycError, CycNum, Rat};
use crate::invariants::{theorem03_report, InvariantError, Theorem03Report};
use crate::matgroup::{classify, close_group, GroupLabel, Mat2};
use crate::paperlab::{int_array, run_suite};

pub const SCHEMA_VERSION: &str = "1";

/// The JSON schema of `analyze --json` output.
pub const ANALYZE_SCHEMA: &str = include_str!("../schema/analyze.schema.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Input did not match the grammar at `position` (a character offset).
    Unexpected {
        position: usize,
        expected: Vec<&'static str>,
    },
    /// The expression parsed but could not be evaluated, e.g. `0^-1`.
    Arithmetic { position: usize, source: CycError },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Unexpected { position, expected } => {
                write!(
                    f,
                    "at position {position}: expected one of {}",
                    expected.join(", ")
                )
            }
            ParseError::Arithmetic { position, source } => {
                write!(f, "at position {position}: {source}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn new(src: &str) -> Self {
        ExprParser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, ParseError> {
        Err(ParseError::Unexpected {
            position: self.pos,
            expected: expected.to_vec(),
        })
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn arith<T>(&self, at: usize, r: Result<T, CycError>) -> Result<T, ParseError> {
        r.map_err(|source| ParseError::Arithmetic {
            position: at,
            source,
        })
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(&["digit"]);
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let v = self.uint()?;
        u64::try_from(v).or_else(|_| {
            self.pos = start;
            self.fail(&["integer below 2^64"])
        })
    }

    fn expr(&mut self) -> Result<CycNum, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CycNum, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CycNum, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.pos;
        let neg = self.eat('-');
        let e = self.small_uint()?;
        let e = i64::try_from(e).or_else(|_| {
            self.pos = at;
            self.fail(&["smaller exponent"])
        })?;
        let r = base.pow(if neg { -e } else { e });
        self.arith(at, r)
    }

    fn atom(&mut self) -> Result<CycNum, ParseError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')', "')'")?;
                Ok(v)
            }
            Some('i') => {
                self.pos += 1;
                Ok(CycNum::root_of_unity(4, 1).expect("positive conductor"))
            }
            Some('z') => {
                for c in "zeta".chars() {
                    self.expect(c, "'zeta('")?;
                }
                self.expect('(', "'('")?;
                let at = self.pos;
                let n = self.small_uint()?;
                self.expect(')', "')'")?;
                let r = CycNum::root_of_unity(n, 1);
                self.arith(at, r)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let at = self.pos;
                let den = if self.eat('/') {
                    self.uint()?
                } else {
                    BigInt::from(1)
                };
                if den == BigInt::from(0) {
                    return Err(ParseError::Arithmetic {
                        position: at,
                        source: CycError::DivisionByZero,
                    });
                }
                Ok(CycNum::from_rat(Rat::new(num, den)))
            }
            _ => self.fail(&["number", "'zeta('", "'i'", "'('", "'-'"]),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            self.fail(&["end of input"])
        } else {
            Ok(())
        }
    }
}

/// Parses a cyclotomic expression such as `1/2*zeta(8)^3 - i`.
pub fn parse_cyc(text: &str) -> Result<CycNum, ParseError> {
    let mut p = ExprParser::new(text);
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parses `[[a,b],[c,d]]` with cyclotomic expression entries.
pub fn parse_matrix(text: &str) -> Result<Mat2, ParseError> {
    let mut p = ExprParser::new(text);
    let mut e = Vec::with_capacity(4);
    p.expect('[', "'['")?;
    for row in 0..2 {
        if row == 1 {
            p.expect(',', "','")?;
        }
        p.expect('[', "'['")?;
        e.push(p.expr()?);
        p.expect(',', "','")?;
        e.push(p.expr()?);
        p.expect(']', "']'")?;
    }
    p.expect(']', "']'")?;
    p.finish()?;
    let [a, b, c, d]: [CycNum; 4] = e.try_into().expect("four entries");
    Ok(Mat2::new(a, b, c, d))
}

/// Parses `p` or `p/q`, with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rat, String> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad rational {text:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("bad rational {text:?}"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rat::new(num, den))
}

fn label_json(label: &GroupLabel) -> (Value, Value) {
    let all: Vec<Value> = label
        .all_matches
        .iter()
        .map(|m| json!(m.to_string()))
        .collect();
    (json!(label.primary().to_string()), Value::Array(all))
}

/// The machine-readable analysis report.
pub fn report_json(r: &Theorem03Report, alpha: &Rat, beta: &Rat) -> Value {
    let (label, all_matches) = label_json(&r.group_label);
    let cyclotomic = match (&r.cyclotomic_factors, &r.noncyclotomic_witness) {
        (Some(f), _) => json!({
            "flag": true,
            "factors": f.factors.iter().map(|&(d, m)| json!([d, m])).collect::<Vec<_>>(),
        }),
        (None, Some(w)) => json!({"flag": false, "witness": int_array(w)}),
        (None, None) => json!({"flag": r.cyclotomic}),
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": {
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
            "aut_shape": r.aut_shape,
        },
        "group": {
            "order": r.group_order,
            "label": label,
            "all_matches": all_matches,
            "generators": r.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        },
        "series": {
            "num": int_array(r.hilbert_series.num()),
            "den": int_array(r.hilbert_series.den()),
        },
        "hdet_trivial": r.hdet_trivial,
        "gorenstein": {
            "by_hdet": r.gorenstein_by_hdet,
            "by_stanley": r.gorenstein_by_stanley,
            "as_index": r.as_index,
        },
        "cyclotomic": cyclotomic,
        "bireflections": {
            "count": r.bireflection_count,
            "generates": r.generated_by_bireflections,
        },
        "theorem03": {
            "C2": r.c2,
            "C3": r.c3,
            "consistent": r.consistent,
        },
    })
}

/// A two-column markdown table for humans.
pub fn report_markdown(r: &Theorem03Report, alpha: &Rat, beta: &Rat) -> String {
    let cyc = match (&r.cyclotomic_factors, &r.noncyclotomic_witness) {
        (Some(f), _) => {
            let fs: Vec<String> = f
                .factors
                .iter()
                .map(|&(d, m)| {
                    if m == 1 {
                        format!("Φ{d}")
                    } else {
                        format!("Φ{d}^{m}")
                    }
                })
                .collect();
            format!("yes ({})", fs.join("·"))
        }
        (None, Some(w)) => format!("no (witness {w})"),
        (None, None) => "no".into(),
    };
    let as_index = r.as_index.map_or("-".to_string(), |l| l.to_string());
    let rows = [
        ("algebra", format!("down-up A({alpha}, {beta})")),
        ("automorphisms", format!("{:?}", r.aut_shape)),
        ("group order", r.group_order.to_string()),
        ("label", r.group_label.to_string()),
        ("Hilbert series", r.hilbert_series.to_string()),
        ("hdet trivial", r.hdet_trivial.to_string()),
        ("Gorenstein (hdet)", r.gorenstein_by_hdet.to_string()),
        ("Gorenstein (Stanley)", r.gorenstein_by_stanley.to_string()),
        ("AS index", as_index),
        ("cyclotomic", cyc),
        ("bireflections", r.bireflection_count.to_string()),
        (
            "generated by bireflections",
            r.generated_by_bireflections.to_string(),
        ),
        ("C2", r.c2.to_string()),
        ("C3", r.c3.to_string()),
        ("C2 ⟺ C3", r.consistent.to_string()),
    ];
    let mut out = String::from("| property | value |\n|---|---|\n");
    for (k, v) in rows {
        out.push_str(&format!("| {k} | {v} |\n"));
    }
    out
}

#[derive(Debug, Parser)]
#[command(
    name = "molien",
    version,
    about = "Exact invariant theory of down-up algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze the fixed ring of a finite group acting on a down-up algebra.
    Analyze {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Generator matrix, e.g. "[[zeta(3),0],[0,zeta(3)^-1]]".
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long, conflicts_with = "md")]
        json: bool,
        #[arg(long)]
        md: bool,
    },
    /// Run a suite of reproducibility checks and print the results as JSON.
    Paperlab {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Classify the group generated by the given matrices.
    Classify {
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
    },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_AUTOMORPHISM: i32 = 2;
pub const EXIT_CLOSURE: i32 = 3;

fn parse_generators(gens: &[String], err: &mut dyn Write) -> Option<Vec<Mat2>> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        match parse_matrix(g) {
            Ok(m) => out.push(m),
            Err(e) => {
                let _ = writeln!(err, "cannot parse {g:?}: {e}");
                return None;
            }
        }
    }
    Some(out)
}

fn print_json(out: &mut dyn Write, v: &Value) {
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("valid json")
    );
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_FAILURE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match cli.command {
        Command::Analyze {
            alpha,
            beta,
            generators,
            json: _,
            md,
        } => {
            let (alpha, beta) = match (parse_rational(&alpha), parse_rational(&beta)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    let _ = writeln!(err, "{e}");
                    return EXIT_FAILURE;
                }
            };
            let Some(gens) = parse_generators(&generators, err) else {
                return EXIT_FAILURE;
            };
            match theorem03_report(alpha.clone(), beta.clone(), &gens) {
                Ok(r) => {
                    if md {
                        let _ = write!(out, "{}", report_markdown(&r, &alpha, &beta));
                    } else {
                        print_json(out, &report_json(&r, &alpha, &beta));
                    }
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "{e}");
                    match e {
                        InvariantError::NotAnAutomorphism(_) => EXIT_NOT_AUTOMORPHISM,
                        InvariantError::Group(_) => EXIT_CLOSURE,
                        _ => EXIT_FAILURE,
                    }
                }
            }
        }
        Command::Paperlab { suite, max_n } => match run_suite(&suite, max_n) {
            Ok(results) => {
                let all_pass = results.iter().all(|r| r.passed);
                for r in results.iter().filter(|r| !r.passed) {
                    let _ = writeln!(
                        err,
                        "FAIL {}: expected {} computed {}",
                        r.label(),
                        r.expected,
                        r.computed
                    );
                }
                print_json(out, &json!(results));
                if all_pass {
                    EXIT_OK
                } else {
                    EXIT_FAILURE
                }
            }
            Err(e) => {
                let _ = writeln!(err, "{e}");
                EXIT_FAILURE
            }
        },
        Command::Classify { generators } => {
            let Some(gens) = parse_generators(&generators, err) else {
                return EXIT_FAILURE;
            };
            let label = close_group(&gens).and_then(|h| classify(&h).map(|l| (h.order(), l)));
            match label {
                Ok((order, l)) => {
                    let (primary, all) = label_json(&l);
                    print_json(
                        out,
                        &json!({"order": order, "label": primary, "all_matches": all}),
                    );
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "{e}");
                    EXIT_CLOSURE
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycarith::RootOfUnity;

    #[test]
    fn parses_table_entries() {
        assert_eq!(parse_matrix("[[0,1],[1,0]]").unwrap(), Mat2::swap());
        assert_eq!(
            parse_matrix("[[zeta(8),0],[0,zeta(8)^-1]]").unwrap(),
            Mat2::torus(RootOfUnity::new(8, 1))
        );
        assert_eq!(
            parse_matrix("[[-zeta(12),0],[0,zeta(12)^-1]]").unwrap(),
            Mat2::signed_torus(RootOfUnity::new(12, 1))
        );
        assert_eq!(
            parse_matrix(" [[ 0 , -1 ] , [ 1 , 0 ]] ").unwrap(),
            Mat2::quarter_turn_inv()
        );
    }

    #[test]
    fn expression_grammar() {
        let i = CycNum::root_of_unity(4, 1).unwrap();
        assert_eq!(parse_cyc("i").unwrap(), i);
        assert_eq!(parse_cyc("i^2").unwrap(), CycNum::from_int(-1));
        assert_eq!(parse_cyc("zeta(4)*zeta(4)^-1").unwrap(), CycNum::one());
        assert_eq!(parse_cyc("1 - 2*3").unwrap(), CycNum::from_int(-5));
        assert_eq!(
            parse_cyc("--3/6").unwrap(),
            CycNum::from_rat(Rat::new(1.into(), 2.into()))
        );
        assert_eq!(parse_cyc("(1+i)^2").unwrap(), &i + &i);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_cyc("1 + * 2") {
            Err(ParseError::Unexpected { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        match parse_cyc("0^-1") {
            Err(ParseError::Arithmetic { source, .. }) => {
                assert_eq!(source, CycError::DivisionByZero)
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_cyc("1/0").is_err());
        assert!(parse_matrix("[[1,0],[0,1]").is_err());
        assert!(parse_cyc("zeta(0)").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-2/4").unwrap(),
            Rat::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
