//! Spelling out integer tokens as English words.

const ONES: [&str; 20] = [
    "zero",
    "one",
    "two",
    "three",
    "four",
    "five",
    "six",
    "seven",
    "eight",
    "nine",
    "ten",
    "eleven",
    "twelve",
    "thirteen",
    "fourteen",
    "fifteen",
    "sixteen",
    "seventeen",
    "eighteen",
    "nineteen",
];

const TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

/// Largest value that gets spelled out. Bigger numeric tokens pass through
/// unchanged and are dropped later in the pipeline.
pub const MAX_SPELLED: u64 = 999_999;

/// Spell a non-negative integer token as English words, one word per output
/// element and no hyphens ("23" -> ["twenty", "three"]). Non-numeric tokens
/// and numbers above [`MAX_SPELLED`] pass through as a singleton.
pub fn number_to_words(token: &str) -> Vec<String> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return vec![token.to_string()];
    }
    match token.parse::<u64>() {
        Ok(n) if n <= MAX_SPELLED => spell(n),
        _ => vec![token.to_string()],
    }
}

fn spell(n: u64) -> Vec<String> {
    if n == 0 {
        return vec!["zero".to_string()];
    }
    let mut words = Vec::new();
    push_words(n, &mut words);
    words
}

fn push_words(n: u64, out: &mut Vec<String>) {
    if n >= 1000 {
        push_words(n / 1000, out);
        out.push("thousand".to_string());
        if n % 1000 > 0 {
            push_words(n % 1000, out);
        }
    } else if n >= 100 {
        out.push(ONES[(n / 100) as usize].to_string());
        out.push("hundred".to_string());
        if n % 100 > 0 {
            push_words(n % 100, out);
        }
    } else if n >= 20 {
        out.push(TENS[(n / 10) as usize].to_string());
        if n % 10 > 0 {
            out.push(ONES[(n % 10) as usize].to_string());
        }
    } else {
        out.push(ONES[n as usize].to_string());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(token: &str) -> Vec<String> {
        number_to_words(token)
    }

    #[test]
    fn one_is_one() {
        assert_eq!(words("1"), ["one"]);
    }

    #[test]
    fn zero_is_zero() {
        assert_eq!(words("0"), ["zero"]);
    }

    #[test]
    fn twenty_three_has_two_words() {
        assert_eq!(words("23"), ["twenty", "three"]);
    }

    // Oracle: hand-checked table entries across 0-999 plus range edges.
    #[test]
    fn hand_checked_table() {
        assert_eq!(words("7"), ["seven"]);
        assert_eq!(words("15"), ["fifteen"]);
        assert_eq!(words("40"), ["forty"]);
        assert_eq!(words("99"), ["ninety", "nine"]);
        assert_eq!(words("100"), ["one", "hundred"]);
        assert_eq!(words("101"), ["one", "hundred", "one"]);
        assert_eq!(words("345"), ["three", "hundred", "forty", "five"]);
        assert_eq!(words("1000"), ["one", "thousand"]);
        assert_eq!(words("2574"), ["two", "thousand", "five", "hundred", "seventy", "four"]);
        assert_eq!(
            words("999999"),
            [
                "nine", "hundred", "ninety", "nine", "thousand", "nine", "hundred", "ninety",
                "nine"
            ]
        );
    }

    #[test]
    fn out_of_range_and_non_numeric_pass_through() {
        assert_eq!(words("1000000"), ["1000000"]);
        assert_eq!(words("hello"), ["hello"]);
        assert_eq!(words("a1"), ["a1"]);
        assert_eq!(words(""), [""]);
    }

    #[test]
    fn leading_zeros_parse_as_value() {
        assert_eq!(words("007"), ["seven"]);
    }
}
