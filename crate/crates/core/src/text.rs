//! Small recursive-descent parser for the text grammar.
//!
//! Grammar (whitespace-insensitive, labels are `[A-Za-z0-9_]+`):
//! universes `{a,b,c}`, partitions `{{a},{b,c}}`, pair sets `{(a,b),(b,a)}`.
//! Errors carry the byte position of the offending character.

use crate::error::{Error, Result};

pub(crate) struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(input: &'a str) -> Self {
        Parser {
            input,
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(Error::parse(
                self.pos,
                format!("expected '{}', found '{}'", c as char, b as char),
            )),
            None => Err(Error::parse(
                self.input.len(),
                format!("expected '{}', found end of input", c as char),
            )),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn label(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected a label ([A-Za-z0-9_]+)"));
        }
        Ok(self.input[start..self.pos].to_string())
    }

    /// `{a,b,c}` -> the labels.
    pub(crate) fn braced_label_list(&mut self) -> Result<Vec<String>> {
        self.expect(b'{')?;
        let mut labels = Vec::new();
        if self.eat(b'}') {
            return Ok(labels);
        }
        loop {
            labels.push(self.label()?);
            if self.eat(b'}') {
                return Ok(labels);
            }
            self.expect(b',')?;
        }
    }

    /// `{{a},{b,c}}` -> the blocks, as label lists.
    pub(crate) fn braced_block_list(&mut self) -> Result<Vec<Vec<String>>> {
        self.expect(b'{')?;
        let mut blocks = Vec::new();
        if self.eat(b'}') {
            return Ok(blocks);
        }
        loop {
            blocks.push(self.braced_label_list()?);
            if self.eat(b'}') {
                return Ok(blocks);
            }
            self.expect(b',')?;
        }
    }

    /// `{(a,b),(b,a)}` -> the label pairs.
    pub(crate) fn braced_pair_list(&mut self) -> Result<Vec<(String, String)>> {
        self.expect(b'{')?;
        let mut pairs = Vec::new();
        if self.eat(b'}') {
            return Ok(pairs);
        }
        loop {
            self.expect(b'(')?;
            let left = self.label()?;
            self.expect(b',')?;
            let right = self.label()?;
            self.expect(b')')?;
            pairs.push((left, right));
            if self.eat(b'}') {
                return Ok(pairs);
            }
            self.expect(b',')?;
        }
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(Error::parse(self.pos, "unexpected trailing input"));
        }
        Ok(())
    }
}
