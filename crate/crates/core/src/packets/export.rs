//! JSON and CSV views of a packet decomposition.
//!
//! JSON: `{"n": int, "packets": [{"k": int, "size": int, "collections":
//! [{"suffix": [ints], "words": [[ints], ..]}]}]}` where `size` is the
//! number of collections in the packet.
//!
//! CSV: header `n,k,suffix,word`, one row per word, words in bracket form.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::packets::collection::{Decomposition, Packet};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionJson {
    pub suffix: Word,
    pub words: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketJson {
    pub k: usize,
    pub size: usize,
    pub collections: Vec<CollectionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketsJson {
    pub n: usize,
    pub packets: Vec<PacketJson>,
}

impl From<&Packet> for PacketJson {
    fn from(p: &Packet) -> Self {
        PacketJson {
            k: p.k,
            size: p.size(),
            collections: p
                .collections
                .iter()
                .map(|c| CollectionJson {
                    suffix: c.suffix.word(),
                    words: c.words.clone(),
                })
                .collect(),
        }
    }
}

pub fn to_json_doc<'a>(n: usize, packets: impl IntoIterator<Item = &'a Packet>) -> PacketsJson {
    PacketsJson {
        n,
        packets: packets.into_iter().map(PacketJson::from).collect(),
    }
}

pub fn write_json<'a, W: Write>(
    out: W,
    n: usize,
    packets: impl IntoIterator<Item = &'a Packet>,
) -> Result<()> {
    let doc = to_json_doc(n, packets);
    let mut out = out;
    serde_json::to_writer_pretty(&mut out, &doc).map_err(io_err)?;
    writeln!(out).map_err(io_err)
}

pub fn write_csv<'a, W: Write>(
    out: W,
    n: usize,
    packets: impl IntoIterator<Item = &'a Packet>,
) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(["n", "k", "suffix", "word"])
        .map_err(io_err)?;
    for p in packets {
        for c in &p.collections {
            let suffix = c.suffix.word().to_string();
            for w in &c.words {
                wtr.write_record([
                    n.to_string(),
                    p.k.to_string(),
                    suffix.clone(),
                    w.to_string(),
                ])
                .map_err(io_err)?;
            }
        }
    }
    wtr.flush().map_err(io_err)
}

pub fn decomposition_json(dec: &Decomposition) -> PacketsJson {
    to_json_doc(dec.n, &dec.packets)
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::ResourceLimit(format!("write failed: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packets::collection::build_packet;

    #[test]
    fn json_schema_shape() {
        let p = build_packet(4, 0).unwrap();
        let mut buf = Vec::new();
        write_json(&mut buf, 4, [&p]).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["packets"][0]["k"], 0);
        assert_eq!(v["packets"][0]["size"], 3);
        assert_eq!(
            v["packets"][0]["collections"][0]["suffix"],
            serde_json::json!([4, 2, 1, 3, 2])
        );
        assert_eq!(
            v["packets"][0]["collections"][2]["words"],
            serde_json::json!([[4, 2, 1, 3]])
        );
        let back: PacketsJson = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, to_json_doc(4, [&p]));
    }

    #[test]
    fn csv_rows() {
        let p = build_packet(4, 1).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, 4, [&p]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,k,suffix,word");
        assert_eq!(lines.len(), 1 + 8);
        assert_eq!(lines[1], "4,1,\"[4,2,1]\",\"[1,2,3,4,2,1]\"");
    }
}
