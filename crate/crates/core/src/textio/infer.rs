use super::lexer::{tokenize, Tok};

/// Arity and variable count implied by a collection of texts, taken as the
/// largest `tK`/`xK` index and the longest bracketed multi-index or point.
/// `None` when nothing in the texts pins the value down.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Dimensions {
    pub m: Option<usize>,
    pub n: Option<usize>,
}

fn bump(slot: &mut Option<usize>, v: usize) {
    *slot = Some(slot.map_or(v, |s| s.max(v)));
}

fn index_of(name: &str, letter: char) -> Option<usize> {
    let rest = name.strip_prefix(letter)?;
    if rest.is_empty() {
        Some(1)
    } else {
        rest.parse().ok()
    }
}

/// Counts `Int (, Int)*` followed by `close`, starting at `toks[i]`.
fn tuple_len(toks: &[Tok], mut i: usize, close: char) -> Option<usize> {
    let mut count = 0;
    loop {
        match toks.get(i) {
            Some(Tok::Int(_)) => count += 1,
            _ => return None,
        }
        match toks.get(i + 1) {
            Some(Tok::Sym(',')) => i += 2,
            Some(Tok::Sym(c)) if *c == close => return Some(count),
            _ => return None,
        }
    }
}

pub fn infer_dimensions<'a>(texts: impl IntoIterator<Item = &'a str>) -> Dimensions {
    let mut dims = Dimensions::default();
    for text in texts {
        for line in text.lines() {
            let content = line.split('#').next().unwrap_or("").replace(';', " ");
            let Ok(toks) = tokenize(&content) else { continue };
            let toks: Vec<Tok> = toks.into_iter().map(|t| t.tok).collect();
            for (i, tok) in toks.iter().enumerate() {
                match tok {
                    Tok::Ident(name) if toks.get(i + 1) == Some(&Tok::Sym('[')) => {
                        if let Some(k) = index_of(name, 'x') {
                            bump(&mut dims.n, k);
                        }
                        if let Some(len) = tuple_len(&toks, i + 2, ']') {
                            bump(&mut dims.m, len);
                        }
                    }
                    Tok::Ident(name) => {
                        if let Some(k) = index_of(name, 't') {
                            bump(&mut dims.m, k);
                        }
                    }
                    Tok::Sym('(') => {
                        if let Some(len) = tuple_len(&toks, i + 1, ')') {
                            bump(&mut dims.m, len);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    dims
}
