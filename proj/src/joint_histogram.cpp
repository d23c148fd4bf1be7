#include "ek/joint_histogram.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>
#include <vector>

#include <boost/crc.hpp>

#include "ek/errors.hpp"

namespace ek {
namespace {

constexpr char magic[4] = {'E', 'K', 'H', '1'};
constexpr std::uint32_t format_version = 1;
constexpr std::size_t header_size = 4 + 4 + 8 + 8 + 3 * 2 + 2;
constexpr std::size_t payload_size = JointHistogram::cell_count * 8;
constexpr std::size_t file_size = header_size + payload_size + 8;

// CRC-64/XZ (ECMA-182 polynomial, reflected, all-ones init and xor-out).
using Crc64 = boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, ~0ULL, ~0ULL, true, true>;

std::uint64_t crc64(const std::uint8_t* data, std::size_t size) {
  Crc64 crc;
  crc.process_bytes(data, size);
  return crc.checksum();
}

template <class T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
}

template <class T>
T get_le(const std::uint8_t* in) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return static_cast<T>(v);
}

} // namespace

JointHistogram::JointHistogram(std::uint64_t x, std::uint64_t w)
    : x_(x), w_(w), counts_(std::make_unique<std::array<std::uint64_t, cell_count>>()) {
  counts_->fill(0);
}

JointHistogram::JointHistogram(const JointHistogram& other)
    : x_(other.x_), w_(other.w_),
      counts_(std::make_unique<std::array<std::uint64_t, cell_count>>(*other.counts_)) {}

JointHistogram& JointHistogram::operator=(const JointHistogram& other) {
  if (this != &other) {
    x_ = other.x_;
    w_ = other.w_;
    counts_ = std::make_unique<std::array<std::uint64_t, cell_count>>(*other.counts_);
  }
  return *this;
}

std::uint64_t JointHistogram::total() const noexcept {
  return std::accumulate(counts_->begin(), counts_->end(), std::uint64_t{0});
}

JointHistogram& JointHistogram::operator+=(const JointHistogram& other) {
  if (x_ != other.x_ || w_ != other.w_)
    throw PreconditionError("cannot merge histograms with different (x, w)");
  for (std::size_t i = 0; i < cell_count; ++i)
    (*counts_)[i] += (*other.counts_)[i];
  return *this;
}

bool operator==(const JointHistogram& a, const JointHistogram& b) {
  return a.x_ == b.x_ && a.w_ == b.w_ && *a.counts_ == *b.counts_;
}

void save_histogram(const JointHistogram& h, const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(file_size);
  bytes.insert(bytes.end(), std::begin(magic), std::end(magic));
  put_le<std::uint32_t>(bytes, format_version);
  put_le<std::uint64_t>(bytes, h.x());
  put_le<std::uint64_t>(bytes, h.w());
  for (int i = 0; i < 3; ++i)
    put_le<std::uint16_t>(bytes, JointHistogram::dim);
  put_le<std::uint16_t>(bytes, 0);
  for (const std::uint64_t c : h.cells())
    put_le<std::uint64_t>(bytes, c);
  put_le<std::uint64_t>(bytes, crc64(bytes.data(), bytes.size()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw IoError("write failed for " + path.string());
}

JointHistogram load_histogram(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), {}};
  const std::string name = path.string();

  if (bytes.size() < sizeof magic)
    throw TruncatedError(name + ": file too short for a header");
  if (std::memcmp(bytes.data(), magic, sizeof magic) != 0)
    throw FormatError(name + ": bad magic, not a histogram cache");
  if (bytes.size() < header_size)
    throw TruncatedError(name + ": truncated header");
  if (get_le<std::uint32_t>(bytes.data() + 4) != format_version)
    throw FormatError(name + ": unsupported format version");
  for (int i = 0; i < 3; ++i)
    if (get_le<std::uint16_t>(bytes.data() + 24 + 2 * i) != JointHistogram::dim)
      throw FormatError(name + ": unexpected histogram dimensions");
  if (bytes.size() < file_size)
    throw TruncatedError(name + ": truncated payload");
  if (bytes.size() > file_size)
    throw FormatError(name + ": trailing bytes after checksum");
  if (crc64(bytes.data(), file_size - 8) != get_le<std::uint64_t>(bytes.data() + file_size - 8))
    throw ChecksumError(name + ": checksum mismatch");

  JointHistogram h(get_le<std::uint64_t>(bytes.data() + 8),
                   get_le<std::uint64_t>(bytes.data() + 16));
  const std::uint8_t* cell = bytes.data() + header_size;
  for (auto& c : h.cells()) {
    c = get_le<std::uint64_t>(cell);
    cell += 8;
  }
  return h;
}

} // namespace ek
