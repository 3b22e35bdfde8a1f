use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

const SYMBOLS: &str = "+-*/^()[]{},";

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            if let Some(&(i, '.')) = chars.peek() {
                return Err(Error::Parse {
                    position: i,
                    message: "floating-point literals are not accepted; use p/q".to_string(),
                });
            }
            let value = src[pos..end].parse::<BigInt>().expect("digits");
            out.push(Token { tok: Tok::Int(value), pos });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            out.push(Token { tok: Tok::Ident(src[pos..end].to_string()), pos });
        } else if SYMBOLS.contains(c) {
            out.push(Token { tok: Tok::Sym(c), pos });
            chars.next();
        } else {
            return Err(Error::Parse { position: pos, message: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}
