use std::fmt;
use std::str::FromStr;

use super::{Edge, Triangulation};
use crate::error::{Error, Result};

/// A pair of triangulations of the same polygon plus an optional flip budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub init: Triangulation,
    pub target: Triangulation,
    pub k: Option<u32>,
}

impl Instance {
    pub fn new(init: Triangulation, target: Triangulation, k: Option<u32>) -> Result<Self> {
        super::triangulation::same_size(&init, &target)?;
        Ok(Instance { init, target, k })
    }

    pub fn m(&self) -> u32 {
        self.init.m()
    }

    /// Parses the line-oriented instance format:
    ///
    /// ```text
    /// # comment
    /// m 6
    /// init 0 2 2 4 0 4
    /// final 1 3 3 5 1 5
    /// k 4
    /// ```
    ///
    /// Tokens are whitespace separated and `#` comments run to end of line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            tokens.extend(line.split_whitespace().map(|tok| (i + 1, tok)));
        }

        let mut sections: [Option<(usize, Vec<u32>)>; 4] = Default::default();
        let mut current: Option<usize> = None;
        let mut last_line = 1;
        for (line, tok) in tokens {
            last_line = line;
            let slot = match tok {
                "m" => Some(0),
                "init" => Some(1),
                "final" => Some(2),
                "k" => Some(3),
                _ => None,
            };
            if let Some(slot) = slot {
                if sections[slot].is_some() {
                    return Err(syntax(line, format!("section `{tok}` given twice")));
                }
                sections[slot] = Some((line, Vec::new()));
                current = Some(slot);
                continue;
            }
            let value: u32 = tok
                .parse()
                .map_err(|_| syntax(line, format!("unexpected token `{tok}`")))?;
            match current {
                Some(slot) => sections[slot].as_mut().expect("open section").1.push(value),
                None => {
                    return Err(syntax(
                        line,
                        format!("number `{tok}` before any section keyword"),
                    ))
                }
            }
        }

        let [m, init, fin, k] = sections;
        let single = |name: &str, s: Option<(usize, Vec<u32>)>| -> Result<Option<u32>> {
            match s {
                None => Ok(None),
                Some((_, v)) if v.len() == 1 => Ok(Some(v[0])),
                Some((line, v)) => Err(syntax(
                    line,
                    format!("`{name}` takes one integer, got {}", v.len()),
                )),
            }
        };
        let m = single("m", m)?.ok_or_else(|| syntax(last_line, "missing `m` section".into()))?;
        let k = single("k", k)?;
        let diagonals = |name: &str, s: Option<(usize, Vec<u32>)>| -> Result<Vec<Edge>> {
            let (line, v) =
                s.ok_or_else(|| syntax(last_line, format!("missing `{name}` section")))?;
            if v.len() % 2 != 0 {
                return Err(syntax(
                    line,
                    format!("`{name}` needs an even number of integers"),
                ));
            }
            v.chunks(2)
                .map(|c| {
                    if c[0] == c[1] {
                        Err(syntax(line, format!("degenerate edge {} {}", c[0], c[1])))
                    } else {
                        Ok(Edge::new(c[0], c[1]))
                    }
                })
                .collect()
        };
        let init = diagonals("init", init)?;
        let fin = diagonals("final", fin)?;
        Instance::new(Triangulation::new(m, init)?, Triangulation::new(m, fin)?, k)
    }

    /// Serializes deterministically, diagonals in canonical order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn syntax(line: usize, message: String) -> Error {
    Error::Syntax { line, message }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Instance::parse(s)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m {}", self.m())?;
        for (name, t) in [("init", &self.init), ("final", &self.target)] {
            write!(f, "{name}")?;
            for d in t.sorted_diagonals() {
                write!(f, " {} {}", d.a, d.b)?;
            }
            writeln!(f)?;
        }
        if let Some(k) = self.k {
            writeln!(f, "k {k}")?;
        }
        Ok(())
    }
}
