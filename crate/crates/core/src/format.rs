//! Plain-text group files.
//!
//! ```text
//! # comment
//! components 2
//! 0 2 2 1        <- d s_1 s_2 rank
//! ```
//!
//! Collapsed groups use the header `collapsed <n>` and lines `d s rank`.
//! Gradings are integers or halves written `v/2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graded::{CollapsedGroup, Grading2x, MultiGradedGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFile {
    MultiGraded(MultiGradedGroup),
    Collapsed(CollapsedGroup),
}

impl GroupFile {
    pub fn n(&self) -> usize {
        match self {
            GroupFile::MultiGraded(g) => g.n(),
            GroupFile::Collapsed(g) => g.n(),
        }
    }
}

impl From<MultiGradedGroup> for GroupFile {
    fn from(g: MultiGradedGroup) -> Self {
        GroupFile::MultiGraded(g)
    }
}

impl From<CollapsedGroup> for GroupFile {
    fn from(g: CollapsedGroup) -> Self {
        GroupFile::Collapsed(g)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_rank(line: usize, tok: &str) -> Result<u64> {
    match tok.parse::<u64>() {
        Ok(0) => Err(parse_err(line, "rank must be positive")),
        Ok(r) => Ok(r),
        Err(_) => Err(parse_err(line, format!("bad rank {tok:?}"))),
    }
}

fn parse_grading(line: usize, tok: &str) -> Result<Grading2x> {
    tok.parse().map_err(|_| parse_err(line, format!("bad grading {tok:?}")))
}

impl FromStr for GroupFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then_some((i + 1, content))
        });
        let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let mut words = header.split_whitespace();
        let (kind, n) = match (words.next(), words.next(), words.next()) {
            (Some(kind @ ("components" | "collapsed")), Some(n), None) => {
                let n = n
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| parse_err(header_line, format!("bad component count {n:?}")))?;
                (kind, n)
            }
            _ => {
                return Err(parse_err(
                    header_line,
                    "expected header \"components <n>\" or \"collapsed <n>\"",
                ))
            }
        };

        let collapsed = kind == "collapsed";
        let width = if collapsed { 3 } else { n + 2 };
        let mut multi = MultiGradedGroup::new(n)?;
        let mut coll = CollapsedGroup::new(n)?;
        let mut last_line = header_line;
        for (line, content) in lines {
            last_line = line;
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() != width {
                return Err(parse_err(line, format!("expected {width} fields, found {}", toks.len())));
            }
            let d = toks[0]
                .parse::<i64>()
                .map_err(|_| parse_err(line, format!("bad Maslov grading {:?}", toks[0])))?;
            let rank = parse_rank(line, toks[width - 1])?;
            let gradings =
                toks[1..width - 1].iter().map(|t| parse_grading(line, t)).collect::<Result<Vec<_>>>()?;
            if collapsed {
                coll.insert(d, gradings[0], rank);
            } else {
                multi.insert(d, gradings, rank)?;
            }
        }
        let file = if collapsed { GroupFile::Collapsed(coll) } else { GroupFile::MultiGraded(multi) };
        let empty = match &file {
            GroupFile::MultiGraded(g) => g.is_empty(),
            GroupFile::Collapsed(g) => g.is_empty(),
        };
        if empty {
            return Err(parse_err(last_line, "empty group"));
        }
        Ok(file)
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFile::MultiGraded(g) => {
                writeln!(f, "components {}", g.n())?;
                for (d, s, r) in g.iter() {
                    write!(f, "{d}")?;
                    for x in s {
                        write!(f, " {x}")?;
                    }
                    writeln!(f, " {r}")?;
                }
            }
            GroupFile::Collapsed(g) => {
                writeln!(f, "collapsed {}", g.n())?;
                for (d, s, r) in g.iter() {
                    writeln!(f, "{d} {s} {r}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::data;

    #[test]
    fn parse_multigraded_with_comments() {
        let text = "# parallel cable\ncomponents 2\n0 2 2 1  # top\n\n-8 -2 -2 1\n";
        let file: GroupFile = text.parse().unwrap();
        let expected = MultiGradedGroup::from_int_terms(2, &[(0, &[2, 2], 1), (-8, &[-2, -2], 1)]).unwrap();
        assert_eq!(file, GroupFile::MultiGraded(expected));
    }

    #[test]
    fn parse_half_integers() {
        let file: GroupFile = "components 2\n0 1/2 1/2 1\n-1 -1/2 1/2 1\n".parse().unwrap();
        let GroupFile::MultiGraded(g) = file else { panic!() };
        let h = Grading2x::from_doubled(1);
        assert_eq!(g.rank(0, &[h, h]), 1);
        assert_eq!(g.rank(-1, &[-h, h]), 1);
    }

    #[test]
    fn serialize_collapsed() {
        let text = GroupFile::from(data::trefoil()).to_string();
        assert_eq!(text, "collapsed 1\n-2 -1 1\n-1 0 1\n0 1 1\n");
    }

    #[test]
    fn round_trip_catalog_multigraded() {
        let file = GroupFile::from(data::parallel_cable_multigraded());
        assert_eq!(file.to_string().parse::<GroupFile>().unwrap(), file);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = "components 2\n0 1 1 1\n0 1 1\n".parse::<GroupFile>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = "collapsed 1\n0 x 1\n".parse::<GroupFile>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "collapsed 1\n0 0 0\n".parse::<GroupFile>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "# nothing\ncollapsed 1\n".parse::<GroupFile>().unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, msg: "empty group".into() });
        assert!("".parse::<GroupFile>().is_err());
        assert!("components 0\n".parse::<GroupFile>().is_err());
        assert!("groups 2\n".parse::<GroupFile>().is_err());
        let err = "collapsed 1\n0 1/3 1\n".parse::<GroupFile>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
