use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    /// A name, number, or operator such as `->`.
    Word(String),
    /// A `"quoted"` name.
    Quoted(String),
    Punct(char),
    Newline,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

const PUNCT: &[char] = &['{', '}', '[', ']', ';', '=', '^', ','];

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !PUNCT.contains(&c) && c != '#' && c != '"'
}

/// `[` opens a bracketed name such as `[a,b]` when the next character cannot start a matrix row.
fn opens_bracket_name(next: Option<char>) -> bool {
    matches!(next, Some(c) if !(c == '[' || c == ']' || c == '-' || c.is_ascii_digit() || c.is_whitespace()))
}

pub fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let err = |line, col, msg: &str| Error::Syntax { line, col, msg: msg.into() };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            out.push(Token { tok: Tok::Newline, line, col });
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
                col += 1;
            }
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            col += 1;
            loop {
                match chars.get(i) {
                    None | Some('\n') => return Err(err(l0, c0, "unterminated quoted name")),
                    Some('"') => break,
                    Some(&ch) => s.push(ch),
                }
                i += 1;
                col += 1;
            }
            i += 1;
            col += 1;
            out.push(Token { tok: Tok::Quoted(s), line: l0, col: c0 });
        } else if c == '[' && opens_bracket_name(chars.get(i + 1).copied()) {
            let mut s = String::from("[");
            let mut depth = 1;
            i += 1;
            col += 1;
            while depth > 0 {
                match chars.get(i) {
                    None => return Err(err(l0, c0, "unterminated bracketed name")),
                    Some(&ch) if ch.is_whitespace() => return Err(err(line, col, "whitespace inside a bracketed name")),
                    Some(&ch) => {
                        if ch == '[' {
                            depth += 1;
                        } else if ch == ']' {
                            depth -= 1;
                        }
                        s.push(ch);
                    }
                }
                i += 1;
                col += 1;
            }
            // a bracketed name may continue, as in `[a,b]'`
            while i < chars.len() && is_word_char(chars[i]) {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push(Token { tok: Tok::Word(s), line: l0, col: c0 });
        } else if c == '=' && chars.get(i + 1) == Some(&'>') {
            out.push(Token { tok: Tok::Word("=>".into()), line, col });
            i += 2;
            col += 2;
        } else if PUNCT.contains(&c) {
            out.push(Token { tok: Tok::Punct(c), line, col });
            i += 1;
            col += 1;
        } else {
            let mut s = String::new();
            while i < chars.len() && is_word_char(chars[i]) {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push(Token { tok: Tok::Word(s), line: l0, col: c0 });
        }
    }
    Ok(out)
}

/// Words with a fixed meaning inside blocks; names spelled like this are quoted.
pub const RESERVED: &[&str] = &[
    "ab", "nil2", "free", "basis", "central", "names", "rel", "pow", "comm", "objects", "component", "aut", "alpha",
    "trivial", "->", "=>", ":", "1", "*",
];

/// Whether `s` prints as a bare word and lexes back to itself.
pub fn is_plain(s: &str) -> bool {
    if s.is_empty() || RESERVED.contains(&s) {
        return false;
    }
    if s.starts_with('[') {
        return match lex(s) {
            Ok(t) => t.len() == 1 && t[0].tok == Tok::Word(s.to_string()),
            Err(_) => false,
        };
    }
    let first = s.chars().next().unwrap_or(' ');
    !(first.is_ascii_digit() || first == '-') && s.chars().all(is_word_char)
}

pub fn quote(s: &str) -> String {
    if is_plain(s) {
        s.to_string()
    } else {
        format!("\"{}\"", s)
    }
}
