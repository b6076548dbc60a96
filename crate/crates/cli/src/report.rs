use serde::Serialize;

/// Output of one command: aligned text, a JSON document, and the verdict
/// of check commands.
pub struct Report {
    pub text: String,
    pub json: String,
    pub pass: bool,
}

impl Report {
    pub fn new(text: impl Into<String>, json: &impl Serialize) -> Self {
        Report {
            text: text.into(),
            json: serde_json::to_string_pretty(json).expect("plain data serializes"),
            pass: true,
        }
    }

    pub fn verdict(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{msg}")]
    Input {
        msg: String,
        /// The offending argument and a byte offset into it.
        at: Option<(String, usize)>,
    },
}

impl CliError {
    pub fn msg(msg: impl ToString) -> Self {
        CliError::Input {
            msg: msg.to_string(),
            at: None,
        }
    }

    pub fn located(msg: impl ToString, src: &str, pos: Option<usize>) -> Self {
        CliError::Input {
            msg: msg.to_string(),
            at: pos.map(|p| (src.to_string(), p)),
        }
    }

    /// The message, followed by the source line with a caret under the
    /// reported position.
    pub fn render(&self) -> String {
        let CliError::Input { msg, at } = self;
        let mut out = format!("error: {msg}\n");
        if let Some((src, pos)) = at {
            let col = src.get(..*pos).map_or(0, |s| s.chars().count());
            out.push_str(&format!("  {src}\n  {}^\n", " ".repeat(col)));
        }
        out
    }
}

/// Aligned columns with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ") + "\n"
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}
