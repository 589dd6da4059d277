//! The flat-text matrix file format.
//!
//! Header line: `od <n> vars <name1> <name2> ...`, then n rows of n
//! whitespace-separated entry tokens. A token is `0`, `<var>`, `-<var>`,
//! or `<int>*<var>`, optionally joined by `+` into a sum. Variables must be
//! declared in the header before use. Serialization is defined only for
//! verified designs, whose entries are 0 or +-variable, so files never
//! carry rational coefficients; the parser accepts the wider integer-
//! coefficient grammar so user-supplied claims can be read and refuted.

use std::fmt::Write as _;

use od_core::algebra::{Coeff, PolyMatrix, Polynomial, VarId, VarRegistry};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("entry ({row}, {col}) is not serializable: designs are written only with entries 0 or +-variable")]
    NotSerializable { row: usize, col: usize },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// A parsed matrix file: the declared variable order plus the matrix.
#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub vars: Vec<VarId>,
    pub matrix: PolyMatrix,
}

/// Parses a matrix file, interning variable names into `reg` (so two files
/// parsed into one registry share ids for shared names).
pub fn parse(text: &str, reg: &mut VarRegistry) -> Result<MatrixFile, FormatError> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(0, "empty file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("od") {
        return Err(parse_err(header_no + 1, "header must start with `od`"));
    }
    let order: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_err(header_no + 1, "header needs a positive order"))?;
    if tokens.next() != Some("vars") {
        return Err(parse_err(header_no + 1, "expected `vars` after the order"));
    }
    let mut vars = Vec::new();
    for name in tokens {
        if !is_var_name(name) {
            return Err(parse_err(
                header_no + 1,
                format!("bad variable name `{name}`"),
            ));
        }
        let id = reg.var(name);
        if vars.contains(&id) {
            return Err(parse_err(
                header_no + 1,
                format!("variable `{name}` declared twice"),
            ));
        }
        vars.push(id);
    }
    if vars.is_empty() {
        return Err(parse_err(
            header_no + 1,
            "at least one variable is required",
        ));
    }

    let mut matrix = PolyMatrix::zero(order);
    let mut row = 0;
    for (line_no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if row >= order {
            return Err(parse_err(line_no + 1, "more rows than the declared order"));
        }
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != order {
            return Err(parse_err(
                line_no + 1,
                format!("expected {order} entries, found {}", cells.len()),
            ));
        }
        for (col, cell) in cells.iter().enumerate() {
            let entry = parse_entry(cell, &vars, reg, line_no + 1)?;
            matrix.set(row, col, entry);
        }
        row += 1;
    }
    if row != order {
        return Err(parse_err(0, format!("expected {order} rows, found {row}")));
    }
    Ok(MatrixFile { vars, matrix })
}

fn is_var_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_entry(
    token: &str,
    declared: &[VarId],
    reg: &VarRegistry,
    line: usize,
) -> Result<Polynomial, FormatError> {
    let mut acc = Polynomial::zero();
    for term in token.split('+') {
        if term == "0" {
            continue;
        }
        let (sign, rest) = match term.strip_prefix('-') {
            Some(r) => (-1i64, r),
            None => (1, term),
        };
        let (coeff, name) = match rest.split_once('*') {
            Some((num, name)) => {
                let c: i64 = num
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad coefficient in `{term}`")))?;
                (c, name)
            }
            None => (1, rest),
        };
        let var = reg
            .lookup(name)
            .filter(|v| declared.contains(v))
            .ok_or_else(|| parse_err(line, format!("undeclared variable `{name}`")))?;
        acc = &acc + &Polynomial::var(var).scale(&Coeff::from_integer(sign * coeff));
    }
    Ok(acc)
}

/// Writes a verified design whose entries are 0 or +-variable. The header
/// lists `vars` in the given order (the order type weights bind to).
pub fn serialize(
    matrix: &PolyMatrix,
    vars: &[VarId],
    reg: &VarRegistry,
) -> Result<String, FormatError> {
    let n = matrix.order();
    let mut out = String::new();
    let names: Vec<&str> = vars.iter().map(|&v| reg.name(v)).collect();
    writeln!(out, "od {n} vars {}", names.join(" ")).unwrap();
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let e = matrix.get(i, j);
            if e.is_zero() {
                row.push("0".to_string());
                continue;
            }
            match e.as_signed_var() {
                Some((v, sign)) if vars.contains(&v) => {
                    let name = reg.name(v);
                    row.push(if sign < 0 {
                        format!("-{name}")
                    } else {
                        name.to_string()
                    });
                }
                _ => return Err(FormatError::NotSerializable { row: i, col: j }),
            }
        }
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let mut reg = VarRegistry::new();
        let a = reg.var("a");
        let b = reg.var("b");
        let m = PolyMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => Polynomial::var(a),
            (0, 1) | (1, 0) => Polynomial::var(b),
            _ => -&Polynomial::var(a),
        });
        let text = serialize(&m, &[a, b], &reg).unwrap();
        assert_eq!(text, "od 2 vars a b\na b\nb -a\n");
        let parsed = parse(&text, &mut reg).unwrap();
        assert_eq!(parsed.matrix, m);
        assert_eq!(parsed.vars, vec![a, b]);
        // Serialize again: canonical files are fixed points.
        assert_eq!(serialize(&parsed.matrix, &parsed.vars, &reg).unwrap(), text);
    }

    #[test]
    fn parses_sums_and_integer_coefficients() {
        let mut reg = VarRegistry::new();
        let text = "od 2 vars a b\n0 2*a+-b\na+b -a\n";
        let parsed = parse(text, &mut reg).unwrap();
        let a = reg.lookup("a").unwrap();
        let b = reg.lookup("b").unwrap();
        let two_a_minus_b =
            &Polynomial::var(a).scale(&Coeff::from_integer(2)) - &Polynomial::var(b);
        assert_eq!(parsed.matrix.get(0, 1), &two_a_minus_b);
        assert_eq!(
            parsed.matrix.get(1, 0),
            &(&Polynomial::var(a) + &Polynomial::var(b))
        );
    }

    #[test]
    fn rejects_malformed_files() {
        let mut reg = VarRegistry::new();
        for (text, why) in [
            ("", "empty"),
            ("od 2\n", "missing vars"),
            ("od 2 vars a\n a a\n", "row count"),
            ("od 2 vars a\na a\na c\n", "undeclared variable"),
            ("od 2 vars a a\na a\na a\n", "duplicate declaration"),
            ("od 2 vars a\na\na a\n", "short row"),
        ] {
            assert!(parse(text, &mut reg).is_err(), "{why}");
        }
    }

    #[test]
    fn every_light_catalog_design_round_trips() {
        use od_core::constructions::{catalog, Design};
        for entry in catalog().into_iter().filter(|e| e.order <= 200) {
            let mut reg = VarRegistry::new();
            let design = (entry.build)(&mut reg).unwrap();
            let parts: Vec<(&PolyMatrix, Vec<VarId>)> = match &design {
                Design::Od { matrix, od_type } => vec![(matrix, od_type.vars().to_vec())],
                Design::Aod(p) => vec![
                    (&p.c, p.type_c.vars().to_vec()),
                    (&p.d, p.type_d.vars().to_vec()),
                ],
                Design::Pd(t) => vec![
                    (&t.m1, t.type_m1.vars().to_vec()),
                    (&t.m2, t.type_m2.vars().to_vec()),
                    (&t.n, t.type_n.vars().to_vec()),
                ],
            };
            for (matrix, vars) in parts {
                let text = serialize(matrix, &vars, &reg).unwrap();
                let parsed = parse(&text, &mut reg).unwrap();
                assert_eq!(&parsed.matrix, matrix, "{} round trip", entry.name);
                assert_eq!(parsed.vars, vars, "{} variable order", entry.name);
            }
        }
    }

    #[test]
    fn refuses_to_serialize_non_design_entries() {
        let mut reg = VarRegistry::new();
        let a = reg.var("a");
        let m = PolyMatrix::from_fn(1, |_, _| Polynomial::var(a).scale(&Coeff::new(1, 2)));
        assert!(matches!(
            serialize(&m, &[a], &reg),
            Err(FormatError::NotSerializable { row: 0, col: 0 })
        ));
    }
}
