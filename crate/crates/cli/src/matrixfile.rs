//! Plain-text density-matrix files: four non-empty lines of four
//! whitespace-separated entries, each entry `re+imj` (e.g. `0.5+0j`,
//! `-0.25-0.3j`, `1e-3+2e-4j`). The parsed matrix goes through the full
//! density-matrix validation gate.

use beamsplit::qlinalg::{Complex, DensityMatrix4, Mat4};
use beamsplit::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<DensityMatrix4> {
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if rows.len() != 4 {
        return Err(Error::InvalidState(format!(
            "matrix file has {} non-empty lines, want 4",
            rows.len()
        )));
    }
    let mut m = Mat4::zeros();
    for (i, line) in rows.iter().enumerate() {
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != 4 {
            return Err(Error::InvalidState(format!(
                "matrix row {} has {} entries, want 4",
                i + 1,
                entries.len()
            )));
        }
        for (j, tok) in entries.iter().enumerate() {
            m[(i, j)] = parse_entry(tok)?;
        }
    }
    DensityMatrix4::new(m)
}

fn bad(tok: &str) -> Error {
    Error::InvalidState(format!("matrix entry '{tok}' is not of the form re+imj"))
}

fn parse_entry(tok: &str) -> Result<Complex> {
    let inner = tok.strip_suffix('j').ok_or_else(|| bad(tok))?;
    // The imaginary part starts at the last sign that is neither leading
    // nor part of an exponent.
    let bytes = inner.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let k = split.ok_or_else(|| bad(tok))?;
    let re: f64 = inner[..k].parse().map_err(|_| bad(tok))?;
    let im: f64 = inner[k..].parse().map_err(|_| bad(tok))?;
    Ok(Complex::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_maximally_mixed_state() {
        let text = "0.25+0j 0+0j 0+0j 0+0j\n\
                    0+0j 0.25+0j 0+0j 0+0j\n\
                    0+0j 0+0j 0.25+0j 0+0j\n\
                    0+0j 0+0j 0+0j 0.25+0j\n";
        let rho = parse_matrix(text).unwrap();
        assert_eq!(rho.matrix()[(0, 0)], Complex::new(0.25, 0.0));
        assert_eq!(rho.rank(), 4);
    }

    #[test]
    fn parses_signs_and_exponents() {
        assert_eq!(parse_entry("0.5+0j").unwrap(), Complex::new(0.5, 0.0));
        assert_eq!(parse_entry("-0.25-0.3j").unwrap(), Complex::new(-0.25, -0.3));
        assert_eq!(parse_entry("1e-3+2e-4j").unwrap(), Complex::new(1e-3, 2e-4));
        assert_eq!(parse_entry("-1E-2-3E-5j").unwrap(), Complex::new(-1e-2, -3e-5));
    }

    #[test]
    fn rejects_malformed_entries() {
        for tok in ["0.5", "0.5+0", "j", "0.5+j*", "+j", "abc+0j"] {
            assert!(parse_entry(tok).is_err(), "accepted '{tok}'");
        }
    }

    #[test]
    fn rejects_wrong_shapes_and_invalid_states() {
        assert!(parse_matrix("0.5+0j 0+0j\n").is_err());
        // Valid shape, trace 2: must fail the density-matrix gate.
        let text = "1+0j 0+0j 0+0j 0+0j\n\
                    0+0j 1+0j 0+0j 0+0j\n\
                    0+0j 0+0j 0+0j 0+0j\n\
                    0+0j 0+0j 0+0j 0+0j\n";
        assert!(matches!(parse_matrix(text), Err(Error::InvalidState(_))));
    }
}
