# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import os
import sys
import tempfile

# The plugins import each other as ansible_collections.singularities.realforms; outside of an
# ansible_collections checkout, expose the repository under that name through a symlink.
COLLECTION_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
NAMESPACE_DIR = os.path.dirname(COLLECTION_ROOT)


def _collections_path():
    if os.path.basename(os.path.dirname(NAMESPACE_DIR)) == "ansible_collections":
        return os.path.dirname(os.path.dirname(NAMESPACE_DIR))
    base = tempfile.mkdtemp(prefix="realforms-")
    namespace = os.path.join(base, "ansible_collections", "singularities")
    os.makedirs(namespace)
    os.symlink(COLLECTION_ROOT, os.path.join(namespace, "realforms"))
    return base


COLLECTIONS_PATH = _collections_path()
if COLLECTIONS_PATH not in sys.path:
    sys.path.insert(0, COLLECTIONS_PATH)
