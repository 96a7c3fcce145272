#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qgr/laurent.hpp"
#include "qgr/quiver.hpp"
#include "qgr/rep.hpp"
#include "qgr/tube.hpp"

namespace qgr {

// Characters of affine quiver representations in the initial cluster
// variables. Each chi(Gr_e) is exact: the F_p point count of the
// subrepresentation variety is a polynomial in p, pinned down by counting at
// one prime more than a degree bound, verified at spare primes, then read at
// p = 1. Everything is memoized per context; safe to share across threads.
class CharacterContext {
 public:
  explicit CharacterContext(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  // lazily built; throws like TubeFamily outside type A~
  const TubeFamily& tubes();

  // chi(Gr_e) by dimension vector, zero values dropped. rigid selects the
  // sharper smooth-variety degree bound <e, d-e> and asserts rigidity.
  std::map<DimVector, long long> euler_characteristics(const RepTemplate& m,
                                                       bool rigid = false);

  LaurentPoly cc_character(const RepTemplate& m, bool rigid = false);
  // product over summands and plain variables u_i for shifted projectives
  LaurentPoly cc_character(const CQObject& obj);
  LaurentPoly character(const TubePoint& t);
  // conventions: negative quasi-length gives 0, quasi-length 0 gives 1
  LaurentPoly tube_character(int tube, int i, int l);
  LaurentPoly band_character(long long lambda, bool inf, int l);

  // chi with the strata between the canonical inner and outer chain
  // submodules removed; equals plain chi on rigid points. The removed region
  // is counted through the quotient tube point and cross-checked against a
  // constrained count at one prime.
  std::map<DimVector, long long> transverse_euler(const TubePoint& t);
  LaurentPoly transverse_character(const TubePoint& t);

  // quasi-simple band character; computed at two parameters and asserted equal
  LaurentPoly generic_variable();

  // initial-cluster monomial attached to a stratum of a d-dimensional module
  LaurentPoly stratum_monomial(const DimVector& d, const DimVector& e) const;

 private:
  std::vector<int> primes_for(const RepTemplate& m, size_t count) const;
  std::map<DimVector, long long> chi_of(const RepTemplate& m, bool rigid);
  // histogram across all e at one prime; nullptr after a budget abort
  std::shared_ptr<const std::map<DimVector, Int>> get_hist(const RepTemplate& m,
                                                           const RepTemplate& md, int p);
  std::shared_ptr<const std::map<DimVector, Int>> peek_hist(const std::string& key);
  Int get_count(const RepTemplate& m, const RepTemplate& md, int p, const DimVector& e);

  Quiver q_;
  IntMatrix emat_;
  std::optional<TubeFamily> tubes_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const std::map<DimVector, Int>>> hist_;
  std::map<std::string, char> hist_tried_;
  std::map<std::string, int> hist_floor_;
  std::map<std::string, Int> cnt_;
  std::map<std::string, std::map<DimVector, long long>> chi_;
  std::map<std::string, LaurentPoly> char_;
  std::optional<LaurentPoly> xdelta_;
};

} // namespace qgr
