#include "evensym/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace evensym {

namespace {

enum class Tok {
	Integer,
	Name,
	Plus,
	Minus,
	Star,
	Slash,
	Caret,
	LParen,
	RParen,
	LBracket,
	RBracket,
	End,
};

struct Token {
	Tok kind = Tok::End;
	std::string text;
	int line = 1;
	int column = 1;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
	fail(Errc::ParseError,
	     msg + " (line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ")");
}

std::vector<Token> tokenize(std::string_view text) {
	std::vector<Token> out;
	int line = 1;
	int column = 1;
	size_t i = 0;
	auto advance = [&](size_t n) {
		for (size_t k = 0; k < n; ++k) {
			if (text[i + k] == '\n') {
				++line;
				column = 1;
			} else {
				++column;
			}
		}
		i += n;
	};
	while (i < text.size()) {
		char c = text[i];
		if (std::isspace(static_cast<unsigned char>(c))) {
			advance(1);
			continue;
		}
		Token tok;
		tok.line = line;
		tok.column = column;
		if (std::isdigit(static_cast<unsigned char>(c))) {
			size_t n = 1;
			while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) ++n;
			tok.kind = Tok::Integer;
			tok.text = std::string(text.substr(i, n));
			advance(n);
		} else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			size_t n = 1;
			while (i + n < text.size() &&
			       (std::isalnum(static_cast<unsigned char>(text[i + n])) || text[i + n] == '_'))
				++n;
			tok.kind = Tok::Name;
			tok.text = std::string(text.substr(i, n));
			advance(n);
		} else {
			switch (c) {
				case '+': tok.kind = Tok::Plus; break;
				case '-': tok.kind = Tok::Minus; break;
				case '*': tok.kind = Tok::Star; break;
				case '/': tok.kind = Tok::Slash; break;
				case '^': tok.kind = Tok::Caret; break;
				case '(': tok.kind = Tok::LParen; break;
				case ')': tok.kind = Tok::RParen; break;
				case '[': tok.kind = Tok::LBracket; break;
				case ']': tok.kind = Tok::RBracket; break;
				default:
					parse_fail(tok, std::string("unexpected character '") + c + "'");
			}
			tok.text = std::string(1, c);
			advance(1);
		}
		out.push_back(std::move(tok));
	}
	Token end;
	end.kind = Tok::End;
	end.line = line;
	end.column = column;
	out.push_back(std::move(end));
	return out;
}

// Returns the 0-based coordinate index when the name has the form x<K>
// with 1 <= K <= dim, and -1 otherwise.
int coordinate_index(const std::string& name, int dim) {
	if (name.size() < 2 || name[0] != 'x') return -1;
	int value = 0;
	for (size_t k = 1; k < name.size(); ++k) {
		if (!std::isdigit(static_cast<unsigned char>(name[k]))) return -1;
		if (value > 1000) return -1;
		value = value * 10 + (name[k] - '0');
	}
	if (value < 1 || value > dim) return -1;
	return value - 1;
}

class Parser {
 public:
	Parser(const RingSpec& spec, int rank, bool scalars_only, std::string_view text)
	    : spec_(spec), rank_(rank), scalars_only_(scalars_only), tokens_(tokenize(text)) {}

	Superfunction run() {
		Superfunction value = expr();
		if (peek().kind != Tok::End) parse_fail(peek(), "unexpected trailing input");
		return value;
	}

 private:
	const Token& peek() const { return tokens_[pos_]; }

	Token take() { return tokens_[pos_++]; }

	bool accept(Tok kind) {
		if (peek().kind != kind) return false;
		++pos_;
		return true;
	}

	Token expect(Tok kind, const std::string& what) {
		if (peek().kind != kind) parse_fail(peek(), "expected " + what);
		return take();
	}

	Superfunction expr() {
		Superfunction value = term();
		while (true) {
			if (accept(Tok::Plus))
				value += term();
			else if (accept(Tok::Minus))
				value -= term();
			else
				return value;
		}
	}

	Superfunction term() {
		Superfunction value = factor();
		while (true) {
			if (accept(Tok::Star)) {
				value = value * factor();
			} else if (peek().kind == Tok::Slash) {
				Token at = take();
				Superfunction rhs = factor();
				if (!rhs.soul().is_zero())
					parse_fail(at, "division by an expression with fiber generators");
				CoeffFn c = rhs.body_coeff();
				if (!c.is_unit())
					parse_fail(at, spec_.mode == Mode::Torus
					                   ? "division is limited to nonzero constants in torus mode"
					                   : "division by zero");
				value = value * c.inverse();
			} else {
				return value;
			}
		}
	}

	Superfunction factor() {
		if (accept(Tok::Minus)) return -factor();
		return power();
	}

	Superfunction power() {
		Superfunction value = atom();
		while (peek().kind == Tok::Caret) {
			Token at = take();
			if (peek().kind == Tok::Integer) {
				Token e = take();
				if (e.text.size() > 4) parse_fail(e, "exponent too large");
				int n = std::stoi(e.text);
				if (!value.soul().is_zero())
					parse_fail(at, "integer powers apply to scalars; chain generators with e[i]^e[j]");
				Superfunction acc = Superfunction::one(spec_, rank_);
				for (int k = 0; k < n; ++k) acc = acc * value;
				value = std::move(acc);
			} else {
				value = value * atom();
			}
		}
		return value;
	}

	Superfunction atom() {
		const Token& tok = peek();
		switch (tok.kind) {
			case Tok::Integer: {
				Token lit = take();
				return Superfunction::constant(spec_, rank_, Q(boost::multiprecision::cpp_int(lit.text)));
			}
			case Tok::LParen: {
				take();
				Superfunction value = expr();
				expect(Tok::RParen, "')'");
				return value;
			}
			case Tok::Name: return named();
			default: parse_fail(tok, "expected an expression");
		}
	}

	Superfunction named() {
		Token name = take();
		if (name.text == "t")
			return Superfunction::scalar(spec_, rank_, CoeffFn::time(spec_));
		if (name.text == "e") {
			expect(Tok::LBracket, "'[' after e");
			Token idx = expect(Tok::Integer, "generator index");
			expect(Tok::RBracket, "']'");
			if (scalars_only_) parse_fail(name, "fiber generators are not allowed in this field");
			int j = (idx.text.size() > 4) ? 0 : std::stoi(idx.text);
			if (j < 1 || j > rank_)
				parse_fail(idx, "generator index out of range 1.." + std::to_string(rank_));
			return Superfunction::generator(spec_, rank_, j);
		}
		if (name.text == "sin" || name.text == "cos") {
			if (spec_.mode != Mode::Torus)
				parse_fail(name, name.text + " is only available in torus mode");
			expect(Tok::LParen, "'(' after " + name.text);
			std::vector<int32_t> freq = phase();
			expect(Tok::RParen, "')'");
			return Superfunction::scalar(spec_, rank_,
			                             CoeffFn::trig_mode(spec_, std::move(freq), name.text == "sin"));
		}
		int coord = coordinate_index(name.text, spec_.dim);
		if (coord >= 0) {
			if (spec_.mode == Mode::Torus)
				parse_fail(name, "non-periodic expression in torus mode: " + name.text +
				                     " may appear only inside sin or cos");
			return Superfunction::scalar(spec_, rank_, CoeffFn::coordinate(spec_, coord));
		}
		parse_fail(name, "unknown name '" + name.text + "'");
	}

	// Integer combination of coordinates inside sin/cos.
	std::vector<int32_t> phase() {
		std::vector<int32_t> freq(size_t(spec_.dim), 0);
		bool first = true;
		while (true) {
			int32_t sign = 1;
			if (accept(Tok::Minus))
				sign = -1;
			else if (accept(Tok::Plus))
				sign = 1;
			else if (!first)
				return freq;
			first = false;
			int32_t scale = 1;
			if (peek().kind == Tok::Integer) {
				Token lit = take();
				if (lit.text.size() > 4) parse_fail(lit, "frequency too large");
				scale = std::stoi(lit.text);
				expect(Tok::Star, "'*' between frequency and coordinate");
			}
			Token name = expect(Tok::Name, "a coordinate");
			int coord = coordinate_index(name.text, spec_.dim);
			if (coord < 0)
				parse_fail(name, "sin/cos arguments are integer combinations of coordinates");
			freq[size_t(coord)] += sign * scale;
		}
	}

	RingSpec spec_;
	int rank_;
	bool scalars_only_;
	std::vector<Token> tokens_;
	size_t pos_ = 0;
};

}  // namespace

CoeffFn parse_coeff(const RingSpec& spec, std::string_view text) {
	Superfunction value = Parser(spec, 1, true, text).run();
	return value.body_coeff();
}

Superfunction parse_superfunction(const RingSpec& spec, int rank, std::string_view text) {
	return Parser(spec, rank, false, text).run();
}

}  // namespace evensym
