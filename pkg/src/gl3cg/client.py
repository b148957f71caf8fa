"""Thin client for the service.

In-process by default: requests go straight into the ASGI app, no socket.
Point server_url at a running instance to go over the network instead.  An
optional on-disk cache keyed by the request body makes repeated CLI calls
cheap; responses carrying timings are never cached.
"""

from __future__ import annotations

import asyncio
import hashlib
import json
import os
from pathlib import Path
from typing import Any, Optional

import httpx

CACHE_ENV = "GL3CG_CACHE_DIR"


class ClientInputError(Exception):
    """The service rejected the request (bad weights, labels or patterns)."""


class ServiceError(Exception):
    """The service itself failed; treated as an internal error by the CLI."""


class ServiceClient:
    def __init__(self, server_url: Optional[str] = None,
                 cache_dir: Optional[str] = None) -> None:
        self.server_url = server_url
        env_dir = os.environ.get(CACHE_ENV)
        self.cache_dir = Path(cache_dir or env_dir) if (cache_dir or env_dir) else None

    def _cache_path(self, path: str, payload: dict) -> Optional[Path]:
        if self.cache_dir is None or payload.get("timings"):
            return None
        body = json.dumps({"path": path, "payload": payload}, sort_keys=True)
        digest = hashlib.sha256(body.encode()).hexdigest()
        return self.cache_dir / f"{digest}.json"

    def _send(self, path: str, payload: dict) -> httpx.Response:
        if self.server_url:
            with httpx.Client(base_url=self.server_url, timeout=600.0) as client:
                return client.post(path, json=payload)

        async def go() -> httpx.Response:
            from .service import app
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://gl3cg.internal",
                                         timeout=None) as client:
                return await client.post(path, json=payload)

        return asyncio.run(go())

    def post(self, path: str, payload: dict) -> dict[str, Any]:
        cache_file = self._cache_path(path, payload)
        if cache_file is not None and cache_file.exists():
            return json.loads(cache_file.read_text())
        try:
            resp = self._send(path, payload)
        except httpx.HTTPError as exc:
            raise ServiceError(f"transport failure: {exc}") from exc
        if resp.status_code == 422:
            detail = resp.json().get("detail", "invalid request")
            raise ClientInputError(str(detail))
        if resp.status_code != 200:
            raise ServiceError(f"HTTP {resp.status_code}: {resp.text[:500]}")
        data = resp.json()
        if cache_file is not None:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            tmp = cache_file.with_suffix(".tmp")
            tmp.write_text(json.dumps(data, sort_keys=True))
            tmp.replace(cache_file)
        return data

    def health(self) -> dict[str, Any]:
        if self.server_url:
            with httpx.Client(base_url=self.server_url, timeout=30.0) as client:
                resp = client.get("/health")
        else:
            async def go() -> httpx.Response:
                from .service import app
                transport = httpx.ASGITransport(app=app)
                async with httpx.AsyncClient(transport=transport,
                                             base_url="http://gl3cg.internal"
                                             ) as client:
                    return await client.get("/health")
            resp = asyncio.run(go())
        resp.raise_for_status()
        return resp.json()

    def threej(self, payload: dict) -> dict[str, Any]:
        return self.post("/api/v1/threej", payload)

    def table(self, payload: dict) -> dict[str, Any]:
        return self.post("/api/v1/table", payload)

    def verify(self, payload: dict) -> dict[str, Any]:
        return self.post("/api/v1/verify", payload)
