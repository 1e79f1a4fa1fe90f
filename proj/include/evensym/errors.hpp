#pragma once

#include <stdexcept>
#include <string>

namespace evensym {

// Domain error identities surfaced by the kernel. Each operation's
// contract names which of these it can raise.
enum class Errc {
	OddElement,
	NonInvertibleBody,
	BodyNotOne,
	ChartModeUnsupported,
	TorusModeUnsupported,
	NonConstantMetricDeterminant,
	IrrationalSqrt,
	InexactQuotient,
	DegenerateBody,
	NotLocallyHamiltonian,
	NonzeroResidual,
	NonUnitVolumeCoefficient,
	RankMismatch,
	ModeMismatch,
	DimensionMismatch,
	InhomogeneousInput,
	IndexOutOfRange,
	ParseError,
	SemanticError,
	Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
	Error(Errc code, const std::string& msg)
	    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
	Errc code() const { return code_; }

 private:
	Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
	if (!cond) fail(code, msg);
}

inline const char* errc_name(Errc c) {
	switch (c) {
		case Errc::OddElement: return "OddElement";
		case Errc::NonInvertibleBody: return "NonInvertibleBody";
		case Errc::BodyNotOne: return "BodyNotOne";
		case Errc::ChartModeUnsupported: return "ChartModeUnsupported";
		case Errc::TorusModeUnsupported: return "TorusModeUnsupported";
		case Errc::NonConstantMetricDeterminant: return "NonConstantMetricDeterminant";
		case Errc::IrrationalSqrt: return "IrrationalSqrt";
		case Errc::InexactQuotient: return "InexactQuotient";
		case Errc::DegenerateBody: return "DegenerateBody";
		case Errc::NotLocallyHamiltonian: return "NotLocallyHamiltonian";
		case Errc::NonzeroResidual: return "NonzeroResidual";
		case Errc::NonUnitVolumeCoefficient: return "NonUnitVolumeCoefficient";
		case Errc::RankMismatch: return "RankMismatch";
		case Errc::ModeMismatch: return "ModeMismatch";
		case Errc::DimensionMismatch: return "DimensionMismatch";
		case Errc::InhomogeneousInput: return "InhomogeneousInput";
		case Errc::IndexOutOfRange: return "IndexOutOfRange";
		case Errc::ParseError: return "ParseError";
		case Errc::SemanticError: return "SemanticError";
		case Errc::Internal: return "Internal";
	}
	return "Unknown";
}

}  // namespace evensym
