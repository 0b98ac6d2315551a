use super::{Group, GroupError, Perm};

/// Parses the group text format: a `degree N` line followed by one generator
/// per line in disjoint-cycle notation. Blank lines and `#` comments are ignored.
pub fn parse_group(text: &str) -> Result<Group, GroupError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| GroupError::Parse {
                        line: line_no,
                        msg: "expected `degree N`".into(),
                    })?;
                let n = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| GroupError::Parse {
                        line: line_no,
                        msg: format!("bad degree `{}`", rest.trim()),
                    })?;
                degree = Some(n);
            }
            Some(n) => {
                let g = Perm::parse_cycles(n, line).map_err(|e| GroupError::Parse {
                    line: line_no,
                    msg: e.to_string(),
                })?;
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or_else(|| GroupError::Parse {
        line: 0,
        msg: "missing `degree N` line".into(),
    })?;
    Group::generate(degree, gens)
}
