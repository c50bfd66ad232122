use std::fs;
use std::io::{self, Read};
use std::path::Path;

use simonk::{normalize, tokenize, AlphabetMap, Tokenization, Word};

use crate::Failure;

/// Raw text of the inputs, before tokenization.
pub struct Texts(pub Vec<String>);

/// Words from the positional arguments if present, else one per line of
/// `file` or stdin.
pub fn read_texts(args: &[String], file: Option<&Path>, count: usize) -> Result<Texts, Failure> {
    if !args.is_empty() {
        if args.len() != count {
            return Err(Failure::Usage(format!(
                "expected {count} word(s) as arguments, got {}",
                args.len()
            )));
        }
        return Ok(Texts(args.to_vec()));
    }
    let text = match file {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
        }
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            buf
        }
    };
    let lines: Vec<String> = text.lines().take(count).map(String::from).collect();
    if lines.len() < count {
        return Err(Failure::Usage(format!(
            "expected {count} line(s) of input, got {}",
            lines.len()
        )));
    }
    Ok(Texts(lines))
}

pub struct Encoded {
    pub s: Word,
    pub t: Word,
    pub map: AlphabetMap<String>,
    pub mode: Tokenization,
}

impl Encoded {
    pub fn new(s: &str, t: &str, mode: Tokenization) -> Self {
        let (s, t, map) = normalize(&tokenize(s, mode), &tokenize(t, mode));
        Encoded { s, t, map, mode }
    }

    pub fn render(&self, symbols: &[u32]) -> String {
        let sep = if self.mode == Tokenization::Tokens {
            " "
        } else {
            ""
        };
        self.map.decode(symbols).join(sep)
    }
}
