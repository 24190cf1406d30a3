#include "rbg/invariants.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "rbg/errors.hpp"
#include "rbg/goeritz.hpp"
#include "rbg/lee.hpp"

namespace rbg {

bool operator==(const InvariantRecord& a, const InvariantRecord& b) {
  return a.knot_hash == b.knot_hash && a.s == b.s &&
         a.signature == b.signature && a.determinant == b.determinant &&
         a.jones == b.jones && a.crossing_count == b.crossing_count;
}

InvariantRecord invariant_record(const PlanarDiagram& d) {
  if (!d.is_knot()) throw NotAKnot("invariant_record");
  InvariantRecord r;
  r.knot_hash = pd_digest(d);
  r.crossing_count = d.crossing_count();
  r.jones = jones_t(d);
  r.s = rasmussen_s(d);
  r.signature = signature(d);
  r.determinant = determinant_goeritz(d);
  long long j1 = r.jones.eval_unit(-1);
  if ((j1 < 0 ? -j1 : j1) != r.determinant)
    throw std::logic_error("invariant cross-check failed: |V(-1)| != det");
  if (r.s % 2 || r.signature % 2 || r.determinant % 2 == 0)
    throw std::logic_error("invariant parity check failed");
  return r;
}

// ---- cache ----------------------------------------------------------------

std::string jones_encode(const LPoly& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : p.terms) {
    if (!first) os << ",";
    first = false;
    os << e << ":" << c;
  }
  return os.str();
}

LPoly jones_decode(const std::string& s) {
  LPoly p;
  if (s == "0") return p;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad cache poly");
    p.terms[std::stoi(tok.substr(0, colon))] =
        std::stoll(tok.substr(colon + 1));
  }
  return p;
}

struct InvariantCache::Impl {
  std::map<std::string, InvariantRecord> recs;
  mutable std::mutex mu;
};

const char* InvariantCache::header_line() {
  return "rbg-cache-v1;pd-v1;jones-t(rh-trefoil)=t+t3-t4;sigma(rh-trefoil)=-2";
}

InvariantCache::InvariantCache(const std::string& path)
    : path_(path), impl_(std::make_shared<Impl>()) {
  std::ifstream in(path_);
  if (!in) return;  // fresh cache, file created on first store
  std::string line;
  if (!std::getline(in, line)) return;
  if (line != header_line())
    throw std::runtime_error("stale invariant cache (convention mismatch): " +
                             path_);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    InvariantRecord r;
    std::string poly;
    if (!(is >> r.knot_hash >> r.s >> r.signature >> r.determinant >>
          r.crossing_count >> poly))
      throw std::runtime_error("corrupt invariant cache line: " + line);
    r.jones = jones_decode(poly);
    impl_->recs.emplace(r.knot_hash, std::move(r));
  }
}

std::optional<InvariantRecord> InvariantCache::lookup(
    const std::string& digest) const {
  std::lock_guard<std::mutex> lk(impl_->mu);
  auto it = impl_->recs.find(digest);
  if (it == impl_->recs.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::store(const InvariantRecord& rec) {
  std::lock_guard<std::mutex> lk(impl_->mu);
  if (impl_->recs.count(rec.knot_hash)) return;
  bool fresh = impl_->recs.empty();
  std::ifstream probe(path_);
  bool existed = probe.good();
  probe.close();
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache for append: " + path_);
  if (fresh && !existed) out << header_line() << "\n";
  out << rec.knot_hash << " " << rec.s << " " << rec.signature << " "
      << rec.determinant << " " << rec.crossing_count << " "
      << jones_encode(rec.jones) << "\n";
  impl_->recs.emplace(rec.knot_hash, rec);
}

size_t InvariantCache::size() const {
  std::lock_guard<std::mutex> lk(impl_->mu);
  return impl_->recs.size();
}

InvariantRecord invariant_record(const PlanarDiagram& d,
                                 InvariantCache* cache) {
  if (!cache) return invariant_record(d);
  std::string digest = pd_digest(d);
  if (auto hit = cache->lookup(digest)) return *hit;
  InvariantRecord r = invariant_record(d);
  cache->store(r);
  return r;
}

}  // namespace rbg
