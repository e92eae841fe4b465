/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "model_io.hpp"

#include <cstring>
#include <fstream>

#include "error.hpp"
#include "hash.hpp"

namespace nomenflow {

namespace {

constexpr char kMagic[4] = {'N', 'G', 'N', 'M'};
constexpr uint32_t kFormatVersion = 1;

class CrcWriter {
public:
    explicit CrcWriter(const std::string& path) : out_(path, std::ios::binary), path_(path) {
        if (!out_) fail(ErrorCode::io_error, "cannot write " + path);
    }

    void raw(const void* data, size_t len) {  // excluded from the checksum
        out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
    }

    void bytes(const void* data, size_t len) {
        crc_ = crc32(data, len, crc_);
        raw(data, len);
    }

    void u32(uint32_t v) {
        unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16),
                              static_cast<unsigned char>(v >> 24)};
        bytes(b, 4);
    }

    void f32_block(const std::vector<double>& values) {
        std::vector<unsigned char> buf;
        constexpr size_t kChunk = 1 << 16;
        buf.resize(kChunk * 4);
        size_t i = 0;
        while (i < values.size()) {
            size_t n = std::min(kChunk, values.size() - i);
            for (size_t k = 0; k < n; ++k) {
                float f = static_cast<float>(values[i + k]);
                uint32_t bits;
                std::memcpy(&bits, &f, 4);
                buf[k * 4 + 0] = static_cast<unsigned char>(bits);
                buf[k * 4 + 1] = static_cast<unsigned char>(bits >> 8);
                buf[k * 4 + 2] = static_cast<unsigned char>(bits >> 16);
                buf[k * 4 + 3] = static_cast<unsigned char>(bits >> 24);
            }
            bytes(buf.data(), n * 4);
            i += n;
        }
    }

    void finish() {
        uint32_t checksum = crc_;
        unsigned char b[4] = {static_cast<unsigned char>(checksum),
                              static_cast<unsigned char>(checksum >> 8),
                              static_cast<unsigned char>(checksum >> 16),
                              static_cast<unsigned char>(checksum >> 24)};
        raw(b, 4);
        out_.flush();
        if (!out_) fail(ErrorCode::io_error, "short write to " + path_);
    }

private:
    std::ofstream out_;
    std::string path_;
    uint32_t crc_ = 0;
};

class Reader {
public:
    Reader(const unsigned char* data, size_t size) : data_(data), size_(size) {}

    uint32_t u32() {
        need(4);
        uint32_t v = uint32_t(data_[pos_]) | uint32_t(data_[pos_ + 1]) << 8 |
                     uint32_t(data_[pos_ + 2]) << 16 | uint32_t(data_[pos_ + 3]) << 24;
        pos_ += 4;
        return v;
    }

    std::string str(size_t len) {
        need(len);
        std::string s(reinterpret_cast<const char*>(data_ + pos_), len);
        pos_ += len;
        return s;
    }

    void f32_block(std::vector<double>& out, size_t count) {
        need(count * 4);
        out.resize(count);
        for (size_t i = 0; i < count; ++i) {
            uint32_t bits = uint32_t(data_[pos_]) | uint32_t(data_[pos_ + 1]) << 8 |
                            uint32_t(data_[pos_ + 2]) << 16 | uint32_t(data_[pos_ + 3]) << 24;
            pos_ += 4;
            float f;
            std::memcpy(&f, &bits, 4);
            out[i] = static_cast<double>(f);
        }
    }

    size_t pos() const { return pos_; }
    size_t remaining() const { return size_ - pos_; }

private:
    void need(size_t n) {
        if (size_ - pos_ < n) {
            fail(ErrorCode::checksum_mismatch, "model file is truncated");
        }
    }

    const unsigned char* data_;
    size_t size_;
    size_t pos_ = 0;
};

}  // namespace

void save_model(const NgramModel& model, const std::string& path) {
    model.validate();
    CrcWriter w(path);
    w.bytes(kMagic, 4);
    w.u32(kFormatVersion);
    w.u32(model.features.bucket_count);
    w.u32(model.dim);
    w.u32(static_cast<uint32_t>(model.label_count()));
    w.u32(static_cast<uint32_t>(model.features.min_n));
    w.u32(static_cast<uint32_t>(model.features.max_n));
    uint32_t flags = (model.features.include_tokens ? 1u : 0u) |
                     (static_cast<uint32_t>(model.level) & 0x3u) << 8;
    w.u32(flags);
    for (const auto& label : model.labels) {
        w.u32(static_cast<uint32_t>(label.size()));
        w.bytes(label.data(), label.size());
    }
    w.f32_block(model.embeddings);
    w.f32_block(model.weights);
    w.f32_block(model.bias);
    w.finish();
}

NgramModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot open " + path);
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) fail(ErrorCode::io_error, "cannot read " + path);

    if (data.size() < 4 || std::memcmp(data.data(), kMagic, 4) != 0) {
        fail(ErrorCode::bad_magic, path + " is not a model file");
    }
    Reader r(data.data() + 4, data.size() - 4);
    uint32_t version = r.u32();
    if (version != kFormatVersion) {
        fail(ErrorCode::version_unsupported,
             "unsupported model format version " + std::to_string(version));
    }

    NgramModel model;
    model.features.bucket_count = r.u32();
    model.dim = r.u32();
    const uint32_t label_count = r.u32();
    model.features.min_n = static_cast<int>(r.u32());
    model.features.max_n = static_cast<int>(r.u32());
    const uint32_t flags = r.u32();
    model.features.include_tokens = (flags & 1u) != 0;
    model.level = static_cast<int>((flags >> 8) & 0x3u);

    if (label_count == 0 || label_count > (1u << 24) || model.dim == 0 ||
        model.dim > (1u << 20)) {
        fail(ErrorCode::checksum_mismatch, "model header is implausible");
    }
    model.labels.reserve(label_count);
    for (uint32_t i = 0; i < label_count; ++i) {
        uint32_t len = r.u32();
        if (len > (1u << 16)) fail(ErrorCode::checksum_mismatch, "label length is implausible");
        model.labels.push_back(r.str(len));
    }
    r.f32_block(model.embeddings, size_t(model.features.bucket_count) * model.dim);
    r.f32_block(model.weights, size_t(label_count) * model.dim);
    r.f32_block(model.bias, label_count);

    if (r.remaining() != 4) {
        fail(ErrorCode::checksum_mismatch, "model file has trailing or missing bytes");
    }
    uint32_t stored = r.u32();
    uint32_t actual = crc32(data.data(), data.size() - 4);
    if (stored != actual) {
        fail(ErrorCode::checksum_mismatch, "model file checksum does not match");
    }
    model.validate();
    return model;
}

}  // namespace nomenflow
