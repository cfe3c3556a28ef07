//! Recursive-descent parser for `({1,2,7}_2,{3,5}_3,{4,6}_1)`.

use crate::error::DospError;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8, expected: &'static str) -> Result<(), DospError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(DospError::Syntax {
                pos: self.pos,
                expected,
            })
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, DospError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(DospError::Syntax {
                pos: start,
                expected: "a decimal integer",
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(DospError::IntegerOverflow { pos: start })
    }

    fn signed_number(&mut self) -> Result<i64, DospError> {
        let negative = self.eat(b'-');
        let start = self.pos;
        let magnitude = self.number()?;
        let value =
            i64::try_from(magnitude).map_err(|_| DospError::IntegerOverflow { pos: start })?;
        Ok(if negative { -value } else { value })
    }
}

/// Splits the text into blocks and gaps without semantic validation beyond
/// gap positivity.
pub(super) fn parse_parts(text: &str) -> Result<(Vec<Vec<usize>>, Vec<usize>), DospError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut blocks = Vec::new();
    let mut gaps = Vec::new();
    cur.expect(b'(', "'('")?;
    loop {
        cur.expect(b'{', "'{'")?;
        let mut block = Vec::new();
        if !cur.eat(b'}') {
            loop {
                let start = cur.pos;
                let e = cur.number()?;
                block.push(
                    usize::try_from(e).map_err(|_| DospError::IntegerOverflow { pos: start })?,
                );
                if cur.eat(b'}') {
                    break;
                }
                cur.expect(b',', "',' or '}'")?;
            }
        }
        cur.expect(b'_', "'_'")?;
        let gap = cur.signed_number()?;
        if gap <= 0 {
            return Err(DospError::NonPositiveGap {
                index: blocks.len(),
                gap,
            });
        }
        blocks.push(block);
        gaps.push(gap as usize);
        if cur.eat(b')') {
            break;
        }
        cur.expect(b',', "',' or ')'")?;
    }
    if cur.peek().is_some() {
        return Err(DospError::Syntax {
            pos: cur.pos,
            expected: "end of input",
        });
    }
    Ok((blocks, gaps))
}
