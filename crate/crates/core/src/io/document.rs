use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::framework::{ArgumentId, DungFramework, ObservationBundle};
use crate::praf::ProbabilisticFramework;
use crate::probability::Probability;
use crate::voi::Framework;

/// One line of a framework document.
#[derive(Debug, Clone, PartialEq)]
pub enum Directive {
    Argument {
        id: ArgumentId,
        probability: Option<Probability>,
    },
    Attack {
        source: ArgumentId,
        target: ArgumentId,
        probability: Option<Probability>,
    },
}

impl Directive {
    fn probability(&self) -> Option<Probability> {
        match self {
            Directive::Argument { probability, .. } | Directive::Attack { probability, .. } => {
                *probability
            }
        }
    }
}

/// Parsed directives with their 1-based line numbers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FrameworkDocument {
    directives: Vec<(usize, Directive)>,
}

impl FrameworkDocument {
    pub fn directives(&self) -> impl Iterator<Item = (usize, &Directive)> {
        self.directives.iter().map(|(l, d)| (*l, d))
    }

    /// True when some probability is below 1.
    pub fn is_probabilistic(&self) -> bool {
        self.directives
            .iter()
            .any(|(_, d)| d.probability().is_some_and(|p| !p.is_certain()))
    }

    /// Resolves the directives into a framework. Every attack must follow the
    /// declarations of both its endpoints.
    pub fn into_framework(self) -> Result<Framework> {
        let probabilistic = self.is_probabilistic();
        let mut declared = HashSet::new();
        let mut edges = HashSet::new();
        let mut arguments = Vec::new();
        let mut attacks = Vec::new();
        for (line, directive) in self.directives {
            let at = |e: Error| Error::Syntax {
                line,
                message: e.to_string(),
            };
            match directive {
                Directive::Argument { id, probability } => {
                    if !declared.insert(id.clone()) {
                        return Err(at(Error::DuplicateArgument(id.to_string())));
                    }
                    arguments.push((id, probability.unwrap_or(Probability::ONE)));
                }
                Directive::Attack {
                    source,
                    target,
                    probability,
                } => {
                    for end in [&source, &target] {
                        if !declared.contains(end) {
                            return Err(at(Error::DanglingAttack(
                                source.to_string(),
                                target.to_string(),
                                end.to_string(),
                            )));
                        }
                    }
                    if !edges.insert((source.clone(), target.clone())) {
                        return Err(at(Error::DuplicateAttack(
                            source.to_string(),
                            target.to_string(),
                        )));
                    }
                    attacks.push((source, target, probability.unwrap_or(Probability::ONE)));
                }
            }
        }
        if probabilistic {
            Ok(ProbabilisticFramework::from_entries(arguments, attacks)?.into())
        } else {
            let ids = arguments.into_iter().map(|(a, _)| a).collect();
            let attacks = attacks.into_iter().map(|(s, t, _)| (s, t)).collect();
            Ok(DungFramework::from_ids(ids, attacks)?.into())
        }
    }

    /// Reads the directives as an observation bundle. Endpoints are checked
    /// later against the framework being extended. Omitted probabilities are
    /// 1.
    pub fn into_bundle(self) -> ObservationBundle {
        self.directives
            .into_iter()
            .fold(ObservationBundle::new(), |b, (_, d)| match d {
                Directive::Argument { id, probability } => {
                    b.with_argument(id, Some(probability.unwrap_or(Probability::ONE)))
                }
                Directive::Attack {
                    source,
                    target,
                    probability,
                } => b.with_attack(
                    source,
                    target,
                    Some(probability.unwrap_or(Probability::ONE)),
                ),
            })
    }
}

fn is_decimal(s: &str) -> bool {
    let (int, frac) = s.split_once('.').unwrap_or((s, "1"));
    !int.is_empty()
        && !frac.is_empty()
        && int.bytes().all(|b| b.is_ascii_digit())
        && frac.bytes().all(|b| b.is_ascii_digit())
}

fn parse_line(line: usize, text: &str) -> Result<Directive> {
    let syntax = |message: String| Error::Syntax { line, message };
    let (head, rest) = text
        .split_once('(')
        .ok_or_else(|| syntax(format!("expected `arg(...)` or `att(...)`, found `{text}`")))?;
    let body = rest
        .strip_suffix(").")
        .ok_or_else(|| syntax("directive must end with `).`".to_string()))?;
    let fields: Vec<&str> = body.split(',').map(str::trim).collect();
    let id = |s: &str| ArgumentId::new(s).map_err(|e| syntax(e.to_string()));
    let probability = |s: &str| {
        if !is_decimal(s) {
            return Err(syntax(format!("`{s}` is not a plain decimal probability")));
        }
        let v: f64 = s.parse().map_err(|_| syntax(format!("bad number `{s}`")))?;
        Probability::new(v).map_err(|e| syntax(e.to_string()))
    };
    match (head.trim(), fields.as_slice()) {
        ("arg", [a]) => Ok(Directive::Argument {
            id: id(a)?,
            probability: None,
        }),
        ("arg", [a, p]) => Ok(Directive::Argument {
            id: id(a)?,
            probability: Some(probability(p)?),
        }),
        ("att", [s, t]) => Ok(Directive::Attack {
            source: id(s)?,
            target: id(t)?,
            probability: None,
        }),
        ("att", [s, t, p]) => Ok(Directive::Attack {
            source: id(s)?,
            target: id(t)?,
            probability: Some(probability(p)?),
        }),
        ("arg" | "att", _) => Err(syntax(format!(
            "`{}` takes {} fields, found {}",
            head.trim(),
            if head.trim() == "arg" {
                "1 or 2"
            } else {
                "2 or 3"
            },
            fields.len()
        ))),
        (other, _) => Err(syntax(format!("unknown directive `{other}`"))),
    }
}

/// Parses the grammar without resolving references. `#` starts a comment;
/// blank lines are skipped; LF and CRLF are both accepted.
pub fn parse_document(text: &str) -> Result<FrameworkDocument> {
    let mut directives = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split_once('#').map_or(raw, |(c, _)| c).trim();
        if content.is_empty() {
            continue;
        }
        directives.push((i + 1, parse_line(i + 1, content)?));
    }
    Ok(FrameworkDocument { directives })
}

/// A Dung framework when every probability is 1 (or omitted), a
/// probabilistic one otherwise.
pub fn parse_framework(text: &str) -> Result<Framework> {
    parse_document(text)?.into_framework()
}

/// New arguments and attacks for a value-of-observation query, in the same
/// grammar as framework files.
pub fn parse_bundle(text: &str) -> Result<ObservationBundle> {
    Ok(parse_document(text)?.into_bundle())
}

/// Six decimals with trailing zeros trimmed. Values below 1 never round to
/// `1` or `0`, so the printed token stays inside (0,1) and keeps the
/// element uncertain.
pub fn format_probability(p: Probability) -> String {
    if p.is_certain() {
        return "1".to_string();
    }
    let s = format!("{:.6}", p.value());
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "1" => "0.999999".to_string(),
        "0" => "0.000001".to_string(),
        s => s.to_string(),
    }
}

/// Canonical text: arguments by id, then attacks by `(source, target)`, one
/// per line, probabilities omitted when 1.
pub fn serialize_framework(framework: &Framework) -> String {
    let mut out = String::new();
    let suffix = |p: Probability| {
        if p.is_certain() {
            String::new()
        } else {
            format!(",{}", format_probability(p))
        }
    };
    match framework {
        Framework::Dung(f) => {
            for a in f.arguments() {
                let _ = writeln!(out, "arg({a}).");
            }
            for (s, t) in f.attacks() {
                let _ = writeln!(out, "att({s},{t}).");
            }
        }
        Framework::Probabilistic(pf) => {
            for (a, p) in pf.arguments() {
                let _ = writeln!(out, "arg({a}{}).", suffix(p));
            }
            for (s, t, p) in pf.attacks() {
                let _ = writeln!(out, "att({s},{t}{}).", suffix(p));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Syntax { line, .. } => line,
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn dung_document() {
        let fw = parse_framework("arg(a1).\narg(a2).\natt(a1,a2).\n").unwrap();
        let Framework::Dung(f) = fw else {
            panic!("expected a Dung framework")
        };
        assert_eq!(f.len(), 2);
        assert!(f.has_attack("a1", "a2"));
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let text = "# header\r\n\r\narg(a). # trailing\r\n  arg( b , 0.5 ).\r\natt(a,b).";
        let Framework::Probabilistic(pf) = parse_framework(text).unwrap() else {
            panic!("expected a probabilistic framework")
        };
        assert_eq!(pf.argument_probability("b").unwrap().value(), 0.5);
    }

    #[test]
    fn explicit_one_stays_dung() {
        let fw = parse_framework("arg(a,1.0).\narg(b,1).\natt(a,b,1.000).\n").unwrap();
        assert!(!fw.is_probabilistic());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            line_of(parse_framework("arg(a1).\natt(a1,a9).\n").unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_framework("arg(a).\n\narg(a).\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_framework("att(a,b).\narg(a).\narg(b).\n").unwrap_err()),
            1
        );
        assert_eq!(
            line_of(parse_framework("arg(a).\narg(b).\natt(a,b).\natt(a,b,0.5).\n").unwrap_err()),
            4
        );
        for bad in [
            "arg(a,0).",
            "arg(a,1.5).",
            "arg(a,-0.5).",
            "arg(a,1e-1).",
            "arg(a,.5).",
            "arg(a,0.5",
            "arg(a b).",
            "node(a).",
            "arg().",
            "att(a).",
            "arg(a,0.5,0.5).",
            "arg(a). arg(b).",
        ] {
            assert_eq!(line_of(parse_framework(bad).unwrap_err()), 1, "{bad}");
        }
    }

    #[test]
    fn serialization_is_canonical() {
        let text = "arg(b,0.65).\narg(a).\natt(b,a,0.3).\natt(a,b).\n";
        let fw = parse_framework(text).unwrap();
        let once = serialize_framework(&fw);
        assert_eq!(once, "arg(a).\narg(b,0.65).\natt(a,b).\natt(b,a,0.3).\n");
        let twice = serialize_framework(&parse_framework(&once).unwrap());
        assert_eq!(once, twice);
        assert_eq!(parse_framework(&once).unwrap(), fw);
    }

    #[test]
    fn dung_output_has_no_probabilities() {
        let fw = parse_framework("arg(a1).\narg(a2).\natt(a1,a2).\natt(a2,a1).\n").unwrap();
        let text = serialize_framework(&fw);
        assert_eq!(text, "arg(a1).\narg(a2).\natt(a1,a2).\natt(a2,a1).\n");
    }

    #[test]
    fn probability_formatting() {
        let p = |v| Probability::new(v).unwrap();
        assert_eq!(format_probability(p(0.65)), "0.65");
        assert_eq!(format_probability(p(1.0)), "1");
        assert_eq!(format_probability(p(0.1234567)), "0.123457");
        assert_eq!(format_probability(p(0.9999999)), "0.999999");
        assert_eq!(format_probability(p(1e-9)), "0.000001");
    }

    #[test]
    fn bundles_skip_reference_checks() {
        let b = parse_bundle("arg(b).\natt(b,a4,0.9).\n").unwrap();
        assert_eq!(b.arguments().len(), 1);
        assert_eq!(b.attacks()[0].2.unwrap().value(), 0.9);
        assert_eq!(b.arguments()[0].1, Some(Probability::ONE));
    }
}
