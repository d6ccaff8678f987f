#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mfd/tensor.hpp"

namespace mfd {

/// Named learnable tensors in a stable registration order (the order defines
/// both the optimizer walk and the checkpoint record order).
class ParamStore {
public:
    TensorPtr add(const std::string& name, TensorPtr t) {
        if (index_.count(name))
            throw std::invalid_argument("duplicate parameter name: " + name);
        t->requires_grad = true;
        index_[name] = items_.size();
        items_.emplace_back(name, t);
        return t;
    }

    const std::vector<std::pair<std::string, TensorPtr>>& items() const { return items_; }

    TensorPtr find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : items_[it->second].second;
    }

    std::size_t size() const { return items_.size(); }

private:
    std::vector<std::pair<std::string, TensorPtr>> items_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace mfd
