use super::{MTree, TreeError};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: Option<usize>,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> TreeError {
        TreeError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn tree(&mut self) -> Result<MTree, TreeError> {
        match self.src.get(self.pos) {
            Some(b'.') => {
                self.pos += 1;
                let m = self
                    .arity
                    .ok_or_else(|| self.err("cannot infer the arity of a bare leaf"))?;
                Ok(MTree::leaf(m))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                if self.arity.is_none() {
                    return self.first_node(open);
                }
                let m = self.arity.unwrap();
                let mut children = Vec::with_capacity(m);
                loop {
                    children.push(self.tree()?);
                    match self.src.get(self.pos) {
                        Some(b' ') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err("expected ' ' or ')'")),
                    }
                }
                if children.len() != m {
                    self.pos = open;
                    return Err(self.err(format!(
                        "node has {} children, expected {m}",
                        children.len()
                    )));
                }
                Ok(MTree::graft_unchecked(children))
            }
            Some(_) => Err(self.err("expected '.' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    /// Infers the arity from the first node to close: all of its children
    /// are leaves, so its arity is the number of `.` since its `(`.
    fn first_node(&mut self, open: usize) -> Result<MTree, TreeError> {
        let rest = &self.src[open..];
        let m = rest.iter().position(|&b| b == b')').and_then(|close| {
            let start = rest[..close].iter().rposition(|&b| b == b'(')?;
            Some(rest[start..close].iter().filter(|&&b| b == b'.').count())
        });
        match m {
            Some(m) if m >= 2 => {
                self.arity = Some(m);
                self.pos = open;
                self.tree()
            }
            _ => Err(self.err("cannot infer arity")),
        }
    }
}

pub(super) fn parse(s: &str, arity: Option<usize>) -> Result<MTree, TreeError> {
    if let Some(m) = arity {
        if m < 2 {
            return Err(TreeError::InvalidArity(m));
        }
    }
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        arity,
    };
    let t = p.tree()?;
    if p.pos != s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(t)
}

/// Parses the longest tree key starting at byte `start` of `s`, returning
/// the tree and the end position. Used by expression parsers that embed
/// tree keys in a larger grammar.
pub fn parse_tree_key_prefix(
    s: &str,
    start: usize,
    arity: usize,
) -> Result<(MTree, usize), TreeError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: start,
        arity: Some(arity),
    };
    let t = p.tree()?;
    Ok((t, p.pos))
}
