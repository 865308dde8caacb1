#include "core/container.hpp"

#include <cstring>
#include <fstream>

namespace l4p::core {

namespace {

constexpr char kMagic[4] = {'L', '4', 'T', 'C'};
constexpr std::uint16_t kVersion = 1;
constexpr size_t kAlign = 64;

size_t align_up(size_t n) { return (n + kAlign - 1) / kAlign * kAlign; }

void push_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v & 0xff));
    out.push_back(std::uint8_t(v >> 8));
}

void push_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(std::uint8_t((v >> (8 * i)) & 0xff));
}

std::uint16_t read_u16(const std::uint8_t* p) { return std::uint16_t(p[0] | (p[1] << 8)); }

std::uint32_t read_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
           (std::uint32_t(p[3]) << 24);
}

}  // namespace

std::string dtype_name(Dtype d) {
    switch (d) {
        case Dtype::f32: return "f32";
        case Dtype::f64: return "f64";
        case Dtype::u8: return "u8";
    }
    throw ValidationError("unknown dtype");
}

Dtype dtype_from_name(const std::string& s) {
    if (s == "f32") return Dtype::f32;
    if (s == "f64") return Dtype::f64;
    if (s == "u8") return Dtype::u8;
    throw ValidationError("container: unknown dtype '" + s + "'");
}

size_t dtype_size(Dtype d) {
    switch (d) {
        case Dtype::f32: return 4;
        case Dtype::f64: return 8;
        case Dtype::u8: return 1;
    }
    return 0;
}

void Container::put(const std::string& name, const Array& a, Dtype dtype) {
    ContainerEntry e;
    e.name = name;
    e.dtype = dtype;
    e.shape = a.shape();
    const long n = a.numel();
    e.bytes.resize(size_t(n) * dtype_size(dtype));
    if (dtype == Dtype::f64) {
        std::memcpy(e.bytes.data(), a.ptr(), size_t(n) * 8);
    } else if (dtype == Dtype::f32) {
        auto* dst = reinterpret_cast<float*>(e.bytes.data());
        for (long i = 0; i < n; ++i) dst[i] = float(a[i]);
    } else {
        for (long i = 0; i < n; ++i) {
            double v = a[i];
            e.bytes[size_t(i)] = std::uint8_t(v < 0 ? 0 : (v > 255 ? 255 : v + 0.5));
        }
    }
    if (index_.count(name)) {
        entries_[index_[name]] = std::move(e);
    } else {
        index_[name] = entries_.size();
        entries_.push_back(std::move(e));
    }
}

void Container::put_u8(const std::string& name, Shape shape, const std::vector<std::uint8_t>& raw) {
    if (long(raw.size()) != numel_of(shape))
        throw ValidationError("container: u8 payload size does not match shape " + shape_str(shape));
    ContainerEntry e;
    e.name = name;
    e.dtype = Dtype::u8;
    e.shape = std::move(shape);
    e.bytes = raw;
    if (index_.count(name)) {
        entries_[index_[name]] = std::move(e);
    } else {
        index_[name] = entries_.size();
        entries_.push_back(std::move(e));
    }
}

bool Container::has(const std::string& name) const { return index_.count(name) > 0; }

std::vector<std::string> Container::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

const ContainerEntry& Container::entry(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("container: no entry named '" + name + "'");
    return entries_[it->second];
}

Array Container::get(const std::string& name) const {
    const ContainerEntry& e = entry(name);
    Array a(e.shape);
    const long n = a.numel();
    if (e.dtype == Dtype::f64) {
        std::memcpy(a.ptr(), e.bytes.data(), size_t(n) * 8);
    } else if (e.dtype == Dtype::f32) {
        const auto* src = reinterpret_cast<const float*>(e.bytes.data());
        for (long i = 0; i < n; ++i) a[i] = double(src[i]);
    } else {
        for (long i = 0; i < n; ++i) a[i] = double(e.bytes[size_t(i)]);
    }
    return a;
}

std::vector<std::uint8_t> Container::serialize() const {
    // Lay out payload offsets first so the header can reference them.
    nlohmann::ordered_json header;
    header["version"] = kVersion;
    header["meta"] = meta;
    auto entries_json = nlohmann::ordered_json::array();
    size_t offset = 0;
    for (const auto& e : entries_) {
        offset = align_up(offset);
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["dtype"] = dtype_name(e.dtype);
        je["shape"] = e.shape;
        je["offset"] = offset;
        entries_json.push_back(std::move(je));
        offset += e.bytes.size();
    }
    header["entries"] = std::move(entries_json);
    const std::string hs = header.dump();

    std::vector<std::uint8_t> out;
    out.reserve(16 + hs.size() + offset + kAlign);
    out.insert(out.end(), kMagic, kMagic + 4);
    push_u16(out, kVersion);
    push_u32(out, std::uint32_t(hs.size()));
    out.insert(out.end(), hs.begin(), hs.end());
    // Pad so payload offsets are 64-byte aligned relative to file start too.
    out.resize(align_up(out.size()), 0);
    const size_t payload_base = out.size();
    for (const auto& e : entries_) {
        out.resize(payload_base + align_up(out.size() - payload_base), 0);
        out.insert(out.end(), e.bytes.begin(), e.bytes.end());
    }
    return out;
}

Container Container::deserialize(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 10 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw IoError("container: bad magic");
    const std::uint16_t version = read_u16(bytes.data() + 4);
    if (version != kVersion)
        throw IoError("container: unsupported version " + std::to_string(version));
    const std::uint32_t hlen = read_u32(bytes.data() + 6);
    if (10 + size_t(hlen) > bytes.size()) throw IoError("container: truncated header");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(bytes.begin() + 10, bytes.begin() + 10 + hlen);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("container: header parse failure: ") + e.what());
    }
    const size_t payload_base = align_up(10 + size_t(hlen));

    Container c;
    c.meta = header.value("meta", nlohmann::json::object());
    size_t prev_end = 0;
    for (const auto& je : header.at("entries")) {
        ContainerEntry e;
        e.name = je.at("name").get<std::string>();
        e.dtype = dtype_from_name(je.at("dtype").get<std::string>());
        e.shape = je.at("shape").get<Shape>();
        const size_t offset = je.at("offset").get<size_t>();
        const size_t nbytes = size_t(numel_of(e.shape)) * dtype_size(e.dtype);
        if (offset % kAlign != 0) throw IoError("container: entry '" + e.name + "' not 64-byte aligned");
        if (offset < prev_end) throw IoError("container: overlapping entries at '" + e.name + "'");
        if (payload_base + offset + nbytes > bytes.size())
            throw IoError("container: entry '" + e.name + "' out of bounds");
        e.bytes.assign(bytes.begin() + payload_base + offset,
                       bytes.begin() + payload_base + offset + nbytes);
        prev_end = offset + nbytes;
        c.index_[e.name] = c.entries_.size();
        c.entries_.push_back(std::move(e));
    }
    return c;
}

void Container::save(const std::string& path) const {
    const auto bytes = serialize();
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("container: cannot open for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw IoError("container: write failure: " + path);
}

Container Container::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw IoError("container: cannot open: " + path);
    const std::streamsize n = f.tellg();
    f.seekg(0);
    std::vector<std::uint8_t> bytes(size_t(n));
    f.read(reinterpret_cast<char*>(bytes.data()), n);
    if (!f) throw IoError("container: read failure: " + path);
    return deserialize(bytes);
}

}  // namespace l4p::core
