//! Text serialization of a normal-basis context.
//!
//! ```text
//! format gf2m-normal-basis 1
//! m 127
//! complexity 501
//! self_dual 1
//! alpha <32 hex digits, high limb first>
//! entries <C_M>
//! <row> <col>        (one line per nonzero of M, sorted)
//! checksum <sha256 of every preceding line, newline-terminated>
//! ```
//!
//! Loading recomputes the context from `alpha` and rejects the file if the
//! stored header or table disagrees with the recomputation.

use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::field::M;
use crate::normal_basis::{BasisError, NormalBasisCtx};
use crate::poly_basis::FieldElement;

const MAGIC: &str = "format gf2m-normal-basis 1";

/// The context shipped with the crate.
pub const SHIPPED_CTX: &str = include_str!("../data/normal_basis_m127.txt");

fn checksum(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn write_ctx(ctx: &NormalBasisCtx) -> String {
    let entries = ctx.table().entries();
    let mut body = String::new();
    body.push_str(MAGIC);
    body.push('\n');
    body.push_str(&format!("m {M}\n"));
    body.push_str(&format!("complexity {}\n", ctx.complexity()));
    body.push_str(&format!("self_dual {}\n", u8::from(ctx.is_self_dual())));
    body.push_str(&format!("alpha {}\n", ctx.alpha().to_hex()));
    body.push_str(&format!("entries {}\n", entries.len()));
    for (r, c) in entries {
        body.push_str(&format!("{r} {c}\n"));
    }
    let sum = checksum(&body);
    body.push_str(&format!("checksum {sum}\n"));
    body
}

fn err(msg: impl Into<String>) -> BasisError {
    BasisError::Format(msg.into())
}

fn field<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str, BasisError> {
    let line = line.ok_or_else(|| err(format!("missing `{key}` line")))?;
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| err(format!("expected `{key}`, got `{line}`")))
}

fn number(s: &str, key: &str) -> Result<usize, BasisError> {
    s.trim()
        .parse()
        .map_err(|_| err(format!("`{key}` is not a number: `{s}`")))
}

pub fn read_ctx(text: &str) -> Result<NormalBasisCtx, BasisError> {
    let cut = text.rfind("checksum ").ok_or_else(|| err("missing checksum line"))?;
    let (body, tail) = text.split_at(cut);
    let stored = tail["checksum ".len()..].trim();
    if stored != checksum(body) {
        return Err(err("checksum mismatch"));
    }

    let mut lines = body.lines();
    if lines.next() != Some(MAGIC) {
        return Err(err("unknown format header"));
    }
    let m = number(field(lines.next(), "m")?, "m")?;
    if m != M {
        return Err(err(format!("unsupported extension degree {m}")));
    }
    let complexity = number(field(lines.next(), "complexity")?, "complexity")?;
    let self_dual = match field(lines.next(), "self_dual")? {
        "1" => true,
        "0" => false,
        other => return Err(err(format!("bad self_dual flag `{other}`"))),
    };
    let alpha = FieldElement::from_hex(field(lines.next(), "alpha")?).map_err(|e| err(format!("alpha: {e}")))?;
    let count = number(field(lines.next(), "entries")?, "entries")?;
    let mut entries = Vec::with_capacity(count);
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(r), Some(c), None) = (it.next(), it.next(), it.next()) else {
            return Err(err(format!("bad entry line `{line}`")));
        };
        entries.push((number(r, "row")?, number(c, "col")?));
    }
    if entries.len() != count || count != complexity {
        return Err(err("entry count does not match the header"));
    }

    let ctx = NormalBasisCtx::from_alpha(alpha)?;
    if ctx.complexity() != complexity || ctx.is_self_dual() != self_dual {
        return Err(err("header disagrees with the recomputed basis"));
    }
    if ctx.table().entries() != entries {
        return Err(err("multiplication table disagrees with the recomputed basis"));
    }
    Ok(ctx)
}

/// The shipped context, parsed and verified on first use.
pub fn shipped_ctx() -> &'static NormalBasisCtx {
    static CTX: OnceLock<NormalBasisCtx> = OnceLock::new();
    CTX.get_or_init(|| read_ctx(SHIPPED_CTX).expect("shipped normal basis context is valid"))
}
