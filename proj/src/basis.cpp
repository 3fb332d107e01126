#include "trib/basis.hpp"

#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>

#include "trib/errors.hpp"

namespace trib {

namespace {
constexpr long kChunk = 512;
constexpr long kMaxChunks = 4096;  // caps k at ~2 million triples
}  // namespace

// Chunked storage: the chunk pointer array never reallocates, so a reader that
// has observed ready_ >= k (acquire) can index chunks published before the
// matching release store without taking the growth lock.
struct BasisTable::Impl {
  std::array<std::unique_ptr<std::array<BasisTriple, kChunk>>, kMaxChunks> chunks;
  std::atomic<long> ready{0};  // number of triples built (k values 1..ready)
  std::mutex grow;

  BasisTriple& slot(long k) { return (*chunks[(k - 1) / kChunk])[(k - 1) % kChunk]; }
};

BasisTable::BasisTable(RecurrenceParams params) : params_(params), impl_(new Impl) {}
BasisTable::~BasisTable() = default;

const BasisTriple& BasisTable::triple(long k) const {
  if (k < 1) throw std::invalid_argument("basis triple index must be >= 1");
  if (k > kChunk * kMaxChunks)
    throw ResourceLimitError("basis table capacity exceeded at k=" + std::to_string(k));
  Impl& im = *impl_;
  if (k > im.ready.load(std::memory_order_acquire)) {
    std::lock_guard<std::mutex> lock(im.grow);
    long have = im.ready.load(std::memory_order_relaxed);
    for (long i = have + 1; i <= k; ++i) {
      long chunk = (i - 1) / kChunk;
      if (!im.chunks[chunk]) im.chunks[chunk].reset(new std::array<BasisTriple, kChunk>);
      BasisTriple& t = im.slot(i);
      t.k = i;
      if (i == 1) {
        t.p = 1; t.q = 0; t.r = 0;
      } else if (i == 2) {
        t.p = 0; t.q = 1; t.r = 0;
      } else if (i == 3) {
        t.p = 0; t.q = 0; t.r = 1;
      } else {
        const BasisTriple& t1 = im.slot(i - 1);
        const BasisTriple& t2 = im.slot(i - 2);
        const BasisTriple& t3 = im.slot(i - 3);
        t.p = params_.a * t1.p + params_.b * t2.p + params_.c * t3.p;
        t.q = params_.a * t1.q + params_.b * t2.q + params_.c * t3.q;
        t.r = params_.a * t1.r + params_.b * t2.r + params_.c * t3.r;
      }
    }
    if (k > have) im.ready.store(k, std::memory_order_release);
  }
  return im.slot(k);
}

std::shared_ptr<const BasisTable> basis_table(const RecurrenceParams& params) {
  static std::mutex reg_mutex;
  static std::map<RecurrenceParams, std::shared_ptr<const BasisTable>> registry;
  std::lock_guard<std::mutex> lock(reg_mutex);
  auto& entry = registry[params];
  if (!entry) entry = std::make_shared<const BasisTable>(params);
  return entry;
}

BasisTriple basis_triple(const RecurrenceParams& params, long k) {
  return basis_table(params)->triple(k);
}

mpz_class terminus(const RecurrenceParams& params, const Seed& seed, long k) {
  const BasisTriple t = basis_triple(params, k);
  return t.p * seed[0] + t.q * seed[1] + t.r * seed[2];
}

mpz_class min_terminus(const RecurrenceParams& params, long k) {
  if (k < 4) throw std::invalid_argument("min_terminus needs k >= 4");
  return basis_triple(params, k).sum();
}

}  // namespace trib
