//! Output formatting for `compute`.

use num::{One, Signed, Zero};
use otsym::{QSeries, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Latex,
}

/// Renders the Schur expansion of `f`. Fails only for JSON when a
/// coefficient does not fit a 64-bit integer.
pub fn render(f: &SymFunc, format: Format) -> Result<String, String> {
    let s = f.to_schur();
    match format {
        Format::Json => s
            .to_doc()
            .map(|doc| serde_json::to_string(&doc).expect("documents serialize"))
            .map_err(|e| e.to_string()),
        Format::Table => Ok(s
            .terms()
            .map(|(p, c)| format!("s{p}: {c}"))
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Latex => Ok(latex(&s)),
    }
}

fn latex_series(c: &QSeries) -> String {
    let mut out = String::new();
    for (d, x) in c.coeffs().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if out.is_empty() {
            if x.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if x.is_negative() { " - " } else { " + " });
        }
        let mag = x.abs();
        let coef = if mag.is_integer() {
            mag.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        match (d, mag.is_one()) {
            (0, _) => out.push_str(&coef),
            (1, true) => out.push('q'),
            (1, false) => out.push_str(&format!("{coef}q")),
            (_, true) => out.push_str(&format!("q^{{{d}}}")),
            (_, false) => out.push_str(&format!("{coef}q^{{{d}}}")),
        }
    }
    out
}

fn latex(s: &SymFunc) -> String {
    let terms: Vec<String> = s
        .terms()
        .map(|(p, c)| {
            let shape: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            let basis = format!("s_{{[{}]}}", shape.join(","));
            let poly = latex_series(c);
            let monomial = c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1;
            if poly == "1" {
                basis
            } else if monomial && !poly.starts_with('-') {
                format!("{poly}\\,{basis}")
            } else {
                format!("\\left({poly}\\right){basis}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use otsym::{Basis, Partition};

    fn sample() -> SymFunc {
        SymFunc::from_terms(
            3,
            Basis::Schur,
            2,
            [
                (Partition::row(3), QSeries::from_ints([1, 0, 0], 2)),
                (Partition::new(vec![2, 1]).unwrap(), QSeries::from_ints([0, 1, 1], 2)),
                (Partition::column(3), QSeries::from_ints([0, 0, 2], 2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn table() {
        assert_eq!(
            render(&sample(), Format::Table).unwrap(),
            "s[3]: 1\ns[2,1]: q + q^2\ns[1,1,1]: 2q^2"
        );
    }

    #[test]
    fn latex_form() {
        assert_eq!(
            render(&sample(), Format::Latex).unwrap(),
            "s_{[3]} + \\left(q + q^{2}\\right)s_{[2,1]} + 2q^{2}\\,s_{[1,1,1]}"
        );
    }

    #[test]
    fn json_form() {
        let json = render(&sample(), Format::Json).unwrap();
        assert!(json.starts_with(r#"{"n":3,"basis":"schur","cap":2,"terms":[{"partition":[3],"coeffs":[1,0,0]}"#));
    }
}
