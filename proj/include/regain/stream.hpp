#pragma once

#include "regain/errors.hpp"
#include "regain/finset.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace regain {

/// Enumeration stream: a total map stage -> code where code 0 enumerates
/// nothing and code n+1 enumerates n. Streams are pull-based and single
/// consumer; clone() returns an independent copy positioned at stage 0.
class EnumStream {
public:
    virtual ~EnumStream() = default;

    /// Code for the current stage; advances by one stage.
    std::uint64_t next() {
        ++stage_;
        return do_next();
    }

    /// Stages consumed so far.
    std::uint64_t stage() const { return stage_; }

    virtual std::unique_ptr<EnumStream> clone() const = 0;

protected:
    virtual std::uint64_t do_next() = 0;

private:
    std::uint64_t stage_ = 0;
};

using EnumStreamPtr = std::unique_ptr<EnumStream>;

/// Finite table of codes followed by zeros forever.
class TableEnum final : public EnumStream {
public:
    explicit TableEnum(std::vector<std::uint64_t> codes) : codes_(std::move(codes)) {}

    EnumStreamPtr clone() const override { return std::make_unique<TableEnum>(codes_); }

    const std::vector<std::uint64_t>& codes() const { return codes_; }

protected:
    std::uint64_t do_next() override {
        return pos_ < codes_.size() ? codes_[pos_++] : 0;
    }

private:
    std::vector<std::uint64_t> codes_;
    std::size_t pos_ = 0;
};

/// Stream backed by a pure function of the stage index.
class GeneratorEnum final : public EnumStream {
public:
    explicit GeneratorEnum(std::function<std::uint64_t(std::uint64_t)> fn) : fn_(std::move(fn)) {}

    EnumStreamPtr clone() const override { return std::make_unique<GeneratorEnum>(fn_); }

protected:
    std::uint64_t do_next() override { return fn_(pos_++); }

private:
    std::function<std::uint64_t(std::uint64_t)> fn_;
    std::uint64_t pos_ = 0;
};

inline EnumStreamPtr table_enum(std::vector<std::uint64_t> codes) {
    return std::make_unique<TableEnum>(std::move(codes));
}

inline EnumStreamPtr generator_enum(std::function<std::uint64_t(std::uint64_t)> fn) {
    return std::make_unique<GeneratorEnum>(std::move(fn));
}

/// Collect the first t codes of a clone of f.
std::vector<std::uint64_t> collect(const EnumStream& f, std::uint64_t t);

/// Enum(f)[t]: everything enumerated strictly before stage t.
FinSet enum_prefix(const EnumStream& f, std::uint64_t t);

}  // namespace regain
