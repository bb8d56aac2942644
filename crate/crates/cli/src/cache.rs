//! On-disk persistence of Kazhdan-Lusztig polynomials.
//!
//! A cache file is a sequence of records, each a little-endian `u32` payload
//! length followed by the payload: group id, `y` word and `w` word as
//! `u16`-length-prefixed UTF-8 strings, then a `u32` count and that many
//! `i64` coefficients of `P_{y,w}`, lowest degree first.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use graded_o::{KlTable, QPoly};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "GRADED_O_KL_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub group: String,
    pub y: String,
    pub w: String,
    pub coeffs: Vec<i64>,
}

fn put_str(buf: &mut Vec<u8>, s: &str) {
    buf.extend_from_slice(&(s.len() as u16).to_le_bytes());
    buf.extend_from_slice(s.as_bytes());
}

pub fn encode(records: &[Record]) -> Vec<u8> {
    let mut out = Vec::new();
    for r in records {
        let mut payload = Vec::new();
        put_str(&mut payload, &r.group);
        put_str(&mut payload, &r.y);
        put_str(&mut payload, &r.w);
        payload.extend_from_slice(&(r.coeffs.len() as u32).to_le_bytes());
        for c in &r.coeffs {
            payload.extend_from_slice(&c.to_le_bytes());
        }
        out.extend_from_slice(&(payload.len() as u32).to_le_bytes());
        out.extend_from_slice(&payload);
    }
    out
}

struct Cursor<'a>(&'a [u8]);

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> io::Result<&'a [u8]> {
        if self.0.len() < n {
            return Err(io::Error::new(
                io::ErrorKind::UnexpectedEof,
                "truncated cache record",
            ));
        }
        let (head, tail) = self.0.split_at(n);
        self.0 = tail;
        Ok(head)
    }

    fn u16(&mut self) -> io::Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> io::Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn string(&mut self) -> io::Result<String> {
        let n = self.u16()? as usize;
        String::from_utf8(self.take(n)?.to_vec())
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
    }
}

pub fn decode(bytes: &[u8]) -> io::Result<Vec<Record>> {
    let mut cur = Cursor(bytes);
    let mut out = Vec::new();
    while !cur.0.is_empty() {
        let len = cur.u32()? as usize;
        let mut rec = Cursor(cur.take(len)?);
        let group = rec.string()?;
        let y = rec.string()?;
        let w = rec.string()?;
        let n = rec.u32()? as usize;
        let coeffs = (0..n)
            .map(|_| Ok(i64::from_le_bytes(rec.take(8)?.try_into().unwrap())))
            .collect::<io::Result<Vec<_>>>()?;
        if !rec.0.is_empty() {
            return Err(io::Error::new(
                io::ErrorKind::InvalidData,
                "trailing bytes in record",
            ));
        }
        out.push(Record {
            group,
            y,
            w,
            coeffs,
        });
    }
    Ok(out)
}

fn cache_file(dir: &Path, table: &KlTable) -> PathBuf {
    dir.join(format!("{}.klcache", table.group().kind()))
}

/// Seeds `table` with every complete row found in the cache. Rows for
/// another group or with missing entries are ignored.
pub fn load(dir: &Path, table: &KlTable) -> io::Result<usize> {
    let path = cache_file(dir, table);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let g = table.group().clone();
    let id = g.kind().to_string();
    let mut rows: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for r in decode(&bytes)? {
        if r.group != id {
            continue;
        }
        let parse = |s: &str| g.parse_word(s).and_then(|word| g.from_word(&word)).ok();
        if let (Some(y), Some(w)) = (parse(&r.y), parse(&r.w)) {
            rows.entry(w).or_default().push((y, QPoly::new(r.coeffs)));
        }
    }
    let mut loaded = 0;
    for (w, row) in rows {
        let below = g.ids().filter(|&y| g.bruhat_leq(y, w)).count();
        if row.len() == below {
            table.insert_row(w, &row);
            loaded += 1;
        }
    }
    Ok(loaded)
}

/// Writes every row of `table`, replacing the previous file.
pub fn save(dir: &Path, table: &KlTable) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let g = table.group();
    let id = g.kind().to_string();
    let records: Vec<Record> = table
        .records()
        .into_iter()
        .map(|(y, w, p)| Record {
            group: id.clone(),
            y: g.word_string(y),
            w: g.word_string(w),
            coeffs: p.coeffs().to_vec(),
        })
        .collect();
    let path = cache_file(dir, table);
    let tmp = path.with_extension("klcache.tmp");
    fs::write(&tmp, encode(&records))?;
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode() {
        let recs = vec![
            Record {
                group: "A3".into(),
                y: "2".into(),
                w: "2,1,3,2".into(),
                coeffs: vec![1, 1],
            },
            Record {
                group: "A3".into(),
                y: "e".into(),
                w: "e".into(),
                coeffs: vec![1],
            },
        ];
        let bytes = encode(&recs);
        assert_eq!(decode(&bytes).unwrap(), recs);
        assert!(decode(&bytes[..bytes.len() - 1]).is_err());
    }
}
