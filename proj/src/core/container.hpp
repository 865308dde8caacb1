#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core/array.hpp"

namespace l4p::core {

// Tensor container file format.
//
//   magic "L4TC" | version u16 LE | header_len u32 LE | header JSON (UTF-8)
//   | zero padding to 64-byte boundary | raw little-endian payload
//
// The header is {"version":1,"meta":{...},"entries":[{"name","dtype","shape",
// "offset"},...]} with entries serialized in insertion order and offsets
// relative to the start of the payload section. Every entry payload starts on
// a 64-byte boundary. Writing is canonical: identical contents produce
// identical bytes.

enum class Dtype { f32, f64, u8 };

std::string dtype_name(Dtype d);
Dtype dtype_from_name(const std::string& s);
size_t dtype_size(Dtype d);

struct ContainerEntry {
    std::string name;
    Dtype dtype = Dtype::f64;
    Shape shape;
    std::vector<std::uint8_t> bytes;  // raw little-endian payload
};

class Container {
public:
    // meta is a free-form JSON object (stage, step, config hash, ...).
    nlohmann::json meta = nlohmann::json::object();

    void put(const std::string& name, const Array& a, Dtype dtype = Dtype::f64);
    void put_u8(const std::string& name, Shape shape, const std::vector<std::uint8_t>& raw);

    bool has(const std::string& name) const;
    std::vector<std::string> names() const;

    // Converts any dtype to double.
    Array get(const std::string& name) const;
    const ContainerEntry& entry(const std::string& name) const;

    void save(const std::string& path) const;
    static Container load(const std::string& path);

    std::vector<std::uint8_t> serialize() const;
    static Container deserialize(const std::vector<std::uint8_t>& bytes);

private:
    std::vector<ContainerEntry> entries_;
    std::map<std::string, size_t> index_;
};

}  // namespace l4p::core
