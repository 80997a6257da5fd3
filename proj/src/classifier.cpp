#include "lieschur/classifier.hpp"

#include <sstream>

#include "lieschur/error.hpp"

namespace lieschur {

std::string Fingerprint::describe() const {
  std::ostringstream os;
  os << "n=" << n << " dimL2=" << derived_dim << " dimZ=" << center_dim << " class=";
  if (nilpotency_class) os << *nilpotency_class;
  else os << "none";
  os << " lcs=";
  for (std::size_t i = 0; i < lcs_dims.size(); ++i) os << (i ? "," : "") << lcs_dims[i];
  os << " dimM=" << dim_M << " t=" << t << " s=" << s;
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra& L) {
  const SeriesReport series = lower_central_series(L);
  const MultiplierReport mult = schur_multiplier_dim(L);
  Fingerprint fp;
  fp.n = L.dim();
  fp.derived_dim = series.derived_dim;
  fp.center_dim = series.center_dim;
  fp.nilpotency_class = series.nilpotency_class;
  fp.lcs_dims = series.lcs_dims;
  fp.dim_M = mult.dim_M;
  fp.t = mult.t;
  fp.s = mult.s;
  fp.abelian = series.derived_dim == 0;
  return fp;
}

const char* to_string(ClassificationStatus status) noexcept {
  switch (status) {
    case ClassificationStatus::Classified: return "Classified";
    case ClassificationStatus::OutOfScope: return "OutOfScope";
    case ClassificationStatus::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

const std::vector<FamilyPins>& s2_family_pins() {
  static const std::vector<FamilyPins> pins = {
      {Family::L3414, 4, 2, 3},
      {Family::L4524PlusA1, 6, 2, 2},
      {Family::HeisenbergPlusAbelian, std::nullopt, 1, 2},
  };
  return pins;
}

namespace {

// m for H(m) ⊕ A(k) recovered from n − dim Z = 2m; 0 if the parity is wrong.
long recovered_heisenberg_rank(const Fingerprint& fp) {
  if (fp.center_dim > fp.n || (fp.n - fp.center_dim) % 2 != 0) return 0;
  return static_cast<long>((fp.n - fp.center_dim) / 2);
}

bool heisenberg_sum_pins(const Fingerprint& fp, long m) {
  return fp.derived_dim == 1 && fp.nilpotency_class == 2u && recovered_heisenberg_rank(fp) == m;
}

ClassificationResult classified(const Fingerprint& fp, Family f, std::vector<long> params,
                                std::string notes) {
  return {ClassificationStatus::Classified, f, std::move(params), fp.s, fp, std::move(notes)};
}

ClassificationResult violation(const Fingerprint& fp) {
  return {ClassificationStatus::TheoremViolation, std::nullopt, {}, fp.s, fp,
          "s=" + std::to_string(fp.s) + " but no family pins match: " + fp.describe()};
}

}  // namespace

ClassificationResult classify(const Fingerprint& fp) {
  if (!fp.nilpotent()) throw Error(ErrorKind::NotNilpotent, "algebra is not nilpotent");
  if (fp.abelian) throw Error(ErrorKind::Abelian, "abelian algebras are outside the s-classification");

  const long n = static_cast<long>(fp.n);
  switch (fp.s) {
    case 0:
      if (heisenberg_sum_pins(fp, 1))
        return classified(fp, Family::HeisenbergPlusAbelian, {1, n - 3}, "H(1)+A(n-3)");
      return violation(fp);
    case 1:
      if (fp.n == 5 && fp.derived_dim == 2 && fp.center_dim == 2 && fp.nilpotency_class == 2u)
        return classified(fp, Family::L4524, {}, "L(4,5,2,4)");
      return violation(fp);
    case 2: {
      std::vector<ClassificationResult> matches;
      if (fp.n == 4 && fp.derived_dim == 2 && fp.nilpotency_class == 3u)
        matches.push_back(classified(fp, Family::L3414, {}, "L(3,4,1,4)"));
      if (fp.n == 6 && fp.derived_dim == 2 && fp.center_dim == 3 && fp.nilpotency_class == 2u)
        matches.push_back(classified(fp, Family::L4524PlusA1, {}, "L(4,5,2,4)+A(1)"));
      const long m = recovered_heisenberg_rank(fp);
      if (m >= 2 && heisenberg_sum_pins(fp, m) &&
          static_cast<long>(fp.dim_M) == n * (n - 3) / 2)
        matches.push_back(classified(fp, Family::HeisenbergPlusAbelian, {m, n - 2 * m - 1},
                                     "H(m)+A(n-2m-1)"));
      if (matches.size() == 1) return matches.front();
      ClassificationResult r = violation(fp);
      if (matches.size() > 1) r.notes = "ambiguous: several family pins match: " + fp.describe();
      return r;
    }
    default:
      if (fp.s < 0) return violation(fp);
      return {ClassificationStatus::OutOfScope, std::nullopt, {}, fp.s, fp,
              "s=" + std::to_string(fp.s) + " is beyond the classified range"};
  }
}

ClassificationResult classify(const LieAlgebra& L) { return classify(fingerprint(L)); }

LemmaGateCheck lemma_l1_gate(const Fingerprint& fp) {
  if (!fp.nilpotent()) throw Error(ErrorKind::NotNilpotent, "algebra is not nilpotent");
  return {!(fp.s == 2 && fp.derived_dim >= 3), fp};
}

LemmaGateCheck lemma_l1_gate(const LieAlgebra& L) { return lemma_l1_gate(fingerprint(L)); }

}  // namespace lieschur
