use std::path::Path;

use scrambling::qla::ComplexMatrix;
use scrambling::C64;

use crate::{CliError, Result};

const UNITARITY_TOL: f64 = 1e-8;

/// Parses `re+imj`, `re-imj`, a bare real or a bare imaginary `imj`.
pub fn parse_complex(token: &str) -> Option<C64> {
    let s = token.trim();
    let Some(body) = s.strip_suffix('j') else {
        return s.parse().ok().map(|re| C64::new(re, 0.0));
    };
    // the sign splitting real and imaginary parts is the last one not
    // belonging to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |t: &str| match t {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        t => t.parse().ok(),
    };
    match split {
        Some(i) => Some(C64::new(body[..i].parse().ok()?, imag(&body[i..])?)),
        None => Some(C64::new(0.0, imag(body)?)),
    }
}

/// One matrix row per non-empty line, entries separated by whitespace or
/// commas; lines starting with `#` are ignored.
pub fn parse_unitary(text: &str, n_qubits: usize) -> Result<ComplexMatrix> {
    let d = 1usize << n_qubits;
    let mut data = Vec::with_capacity(d * d);
    let mut rows = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let before = data.len();
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let z = parse_complex(tok)
                .ok_or_else(|| CliError::UnitaryFile(format!("line {}: cannot parse entry '{tok}'", lineno + 1)))?;
            data.push(z);
        }
        if data.len() - before != d {
            return Err(CliError::UnitaryFile(format!(
                "line {}: expected {d} entries, found {}",
                lineno + 1,
                data.len() - before
            )));
        }
        rows += 1;
    }
    if rows != d {
        return Err(CliError::UnitaryFile(format!("expected {d} rows for {n_qubits} qubits, found {rows}")));
    }
    let u = ComplexMatrix::from_vec(d, d, data)?;
    if !u.is_unitary(UNITARITY_TOL) {
        return Err(CliError::UnitaryFile("matrix is not unitary".into()));
    }
    Ok(u)
}

pub fn read_unitary(path: &Path, n_qubits: usize) -> Result<ComplexMatrix> {
    parse_unitary(&std::fs::read_to_string(path)?, n_qubits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_tokens() {
        assert_eq!(parse_complex("0.5+0.25j"), Some(C64::new(0.5, 0.25)));
        assert_eq!(parse_complex("-1-2j"), Some(C64::new(-1.0, -2.0)));
        assert_eq!(parse_complex("1e-3-2.5E+1j"), Some(C64::new(1e-3, -25.0)));
        assert_eq!(parse_complex("0.7"), Some(C64::new(0.7, 0.0)));
        assert_eq!(parse_complex("-j"), Some(C64::new(0.0, -1.0)));
        assert_eq!(parse_complex("2.5j"), Some(C64::new(0.0, 2.5)));
        assert_eq!(parse_complex("abc"), None);
    }

    #[test]
    fn hadamard_file() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let text = format!("# hadamard\n{s}+0j {s}+0j\n{s}+0j -{s}+0j\n");
        let u = parse_unitary(&text, 1).unwrap();
        assert!((u[(1, 1)].re + s).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(parse_unitary("1 0\n0 1\n", 2).is_err());
        assert!(parse_unitary("1 0 0\n0 1\n", 1).is_err());
        assert!(parse_unitary("1 1\n0 1\n", 1).is_err());
    }
}
